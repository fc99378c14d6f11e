// Copyright 2026 The Orthodyn Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orthodyn/catalog.hpp"

#include <charconv>
#include <utility>
#include <vector>

namespace orthodyn {

OrthoLattice gen_boolean(int n) {
  if (n < 0 || n > 5) throw InputError("boolean:n needs 0 <= n <= 5");
  const Elem size = Elem{1} << n;
  const Elem full = size - 1;
  std::vector<std::pair<Elem, Elem>> leq;
  std::vector<Elem> ortho;
  std::vector<std::string> names;
  for (Elem i = 0; i < size; ++i) {
    for (Elem j = 0; j < size; ++j) {
      if ((i & j) == i) leq.emplace_back(i, j);
    }
    ortho.push_back(full ^ i);
    std::string name;
    if (i == 0) {
      name = "0";
    } else if (i == full) {
      name = "1";
    } else {
      for (int b = 0; b < n; ++b)
        if (i >> b & 1) name += static_cast<char>('a' + b);
    }
    names.push_back(name);
  }
  return OrthoLattice::build(size, leq, std::move(ortho), std::move(names));
}

OrthoLattice gen_mo(int n) {
  if (n < 1 || n > 6) throw InputError("mo:n needs 1 <= n <= 6");
  const Elem size = 2 * static_cast<Elem>(n) + 2;
  const Elem top = size - 1;
  std::vector<std::pair<Elem, Elem>> leq;
  std::vector<Elem> ortho(size);
  std::vector<std::string> names{"0"};
  ortho[0] = top;
  ortho[top] = 0;
  for (Elem atom = 1; atom < top; ++atom) {
    leq.emplace_back(0, atom);
    leq.emplace_back(atom, top);
    ortho[atom] = atom % 2 == 1 ? atom + 1 : atom - 1;
    std::string name(1, static_cast<char>('a' + (atom - 1) / 2));
    if (atom % 2 == 0) name += "'";
    names.push_back(name);
  }
  names.push_back("1");
  return OrthoLattice::build(size, leq, std::move(ortho), std::move(names));
}

OrthoLattice gen_o6() {
  const std::vector<std::pair<Elem, Elem>> leq{{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
  return OrthoLattice::build(6, leq, {5, 4, 3, 2, 1, 0}, {"0", "a", "b", "b'", "a'", "1"});
}

OrthoLattice gen_product(const OrthoLattice& l1, const OrthoLattice& l2) {
  const std::size_t n1 = l1.size();
  const std::size_t n2 = l2.size();
  if (n1 * n2 > kProductSizeGuard) {
    throw InputError("product exceeds " + std::to_string(kProductSizeGuard) + " elements");
  }
  const std::size_t n = n1 * n2;
  std::vector<bool> leq(n * n);
  std::vector<Elem> ortho(n);
  std::vector<std::string> names(n);
  for (Elem i = 0; i < n1; ++i) {
    for (Elem j = 0; j < n2; ++j) {
      const Elem a = i * static_cast<Elem>(n2) + j;
      ortho[a] = l1.ortho(i) * static_cast<Elem>(n2) + l2.ortho(j);
      names[a] = "(" + l1.name(i) + "," + l2.name(j) + ")";
      for (Elem k = 0; k < n1; ++k)
        for (Elem l = 0; l < n2; ++l)
          leq[a * n + k * n2 + l] = l1.leq(i, k) && l2.leq(j, l);
    }
  }
  return OrthoLattice::from_matrix(n, std::move(leq), std::move(ortho), std::move(names));
}

namespace {

std::string_view strip_prefix(std::string_view spec) {
  constexpr std::string_view kPrefix = "catalog:";
  if (spec.starts_with(kPrefix)) spec.remove_prefix(kPrefix.size());
  return spec;
}

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad catalog spec: " + std::string(spec));
  }
  return value;
}

/// Splits "x,y" at the top-level comma.
std::pair<std::string_view, std::string_view> split_args(std::string_view args, std::string_view spec) {
  int depth = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == '(') ++depth;
    if (args[i] == ')') --depth;
    if (args[i] == ',' && depth == 0) return {args.substr(0, i), args.substr(i + 1)};
  }
  throw InputError("product needs two arguments: " + std::string(spec));
}

OrthoLattice parse_spec(std::string_view spec) {
  if (spec == "o6") return gen_o6();
  if (spec.starts_with("boolean:")) return gen_boolean(parse_int(spec.substr(8), spec));
  if (spec.starts_with("mo:")) return gen_mo(parse_int(spec.substr(3), spec));
  if (spec.starts_with("mo") && spec.size() > 2) return gen_mo(parse_int(spec.substr(2), spec));
  if (spec.starts_with("product(") && spec.ends_with(")")) {
    auto [x, y] = split_args(spec.substr(8, spec.size() - 9), spec);
    return gen_product(parse_spec(strip_prefix(x)), parse_spec(strip_prefix(y)));
  }
  throw InputError("unknown catalog spec: " + std::string(spec));
}

}  // namespace

OrthoLattice catalog_lattice(std::string_view spec) { return parse_spec(strip_prefix(spec)); }

bool is_catalog_spec(std::string_view arg) {
  if (arg.starts_with("catalog:")) return true;
  return arg == "o6" || arg.starts_with("boolean:") || arg.starts_with("mo:") ||
         arg.starts_with("product(") ||
         (arg.starts_with("mo") && arg.size() > 2 &&
          arg.find_first_not_of("0123456789", 2) == std::string_view::npos);
}

}  // namespace orthodyn
