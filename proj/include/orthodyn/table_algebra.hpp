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

// Explicitly tabulated dynamic algebras, read from JSON or materialized
// from any enumerable algebra.

#ifndef ORTHODYN_TABLE_ALGEBRA_HPP_
#define ORTHODYN_TABLE_ALGEBRA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthodyn/dynamic_algebra.hpp"
#include "orthodyn/sampling.hpp"

namespace orthodyn {

/// Largest carrier a TableAlgebra accepts (tables are n*n).
inline constexpr std::size_t kTableAlgebraLimit = 1024;

struct AlgebraTables {
  std::size_t size = 0;
  std::vector<std::uint32_t> join;  // row-major n*n
  std::vector<std::uint32_t> mul;   // row-major n*n
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> star;
  std::uint32_t zero = 0;
  std::uint32_t unit = 0;
  std::uint32_t top = 0;
  std::vector<std::string> names;
};

class TableAlgebra {
 public:
  using Element = std::uint32_t;

  /// Validates shapes and index ranges only; the axioms are check_foda's job.
  explicit TableAlgebra(AlgebraTables tables);

  [[nodiscard]] const AlgebraTables& tables() const noexcept { return t_; }

  [[nodiscard]] Element zero() const noexcept { return t_.zero; }
  [[nodiscard]] Element top() const noexcept { return t_.top; }
  [[nodiscard]] Element unit() const noexcept { return t_.unit; }
  [[nodiscard]] Element join(Element a, Element b) const { return t_.join[a * t_.size + b]; }
  [[nodiscard]] Element mul(Element a, Element b) const { return t_.mul[a * t_.size + b]; }
  [[nodiscard]] Element neg(Element a) const { return t_.neg[a]; }
  [[nodiscard]] Element star(Element a) const { return t_.star[a]; }

  [[nodiscard]] std::optional<std::uint64_t> carrier_size() const { return t_.size; }
  [[nodiscard]] double carrier_log2() const;
  [[nodiscard]] Element element_at(std::uint64_t i) const { return static_cast<Element>(i); }
  [[nodiscard]] Element sample(SampleRng& rng) const {
    return static_cast<Element>(rng.below(t_.size));
  }
  /// The element's name, or its index.
  [[nodiscard]] std::string format(Element a) const;
  [[nodiscard]] Element parse_element(std::string_view text) const;

 private:
  AlgebraTables t_;
};

static_assert(DynamicAlgebra<TableAlgebra>);

/// Tabulates an enumerable algebra; element i is alg.element_at(i).
template <DynamicAlgebra K>
TableAlgebra materialize(const K& alg) {
  const auto n = alg.carrier_size();
  if (!n || *n > kTableAlgebraLimit) {
    throw AlgebraError("carrier too large to tabulate");
  }
  std::vector<ElementOf<K>> el;
  for (std::uint64_t i = 0; i < *n; ++i) el.push_back(alg.element_at(i));
  std::vector<std::uint32_t> order(*n);
  for (std::uint32_t i = 0; i < *n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return el[a] < el[b]; });
  auto index = [&](const ElementOf<K>& x) -> std::uint32_t {
    auto it = std::lower_bound(order.begin(), order.end(), x,
                               [&](std::uint32_t i, const ElementOf<K>& y) { return el[i] < y; });
    if (it == order.end() || !(el[*it] == x)) throw AlgebraError("operation leaves the carrier");
    return *it;
  };
  AlgebraTables t;
  t.size = *n;
  for (std::uint64_t i = 0; i < *n; ++i) {
    for (std::uint64_t j = 0; j < *n; ++j) {
      t.join.push_back(index(alg.join(el[i], el[j])));
      t.mul.push_back(index(alg.mul(el[i], el[j])));
    }
    t.neg.push_back(index(alg.neg(el[i])));
    t.star.push_back(index(alg.star(el[i])));
    t.names.push_back(alg.format(el[i]));
  }
  t.zero = index(alg.zero());
  t.unit = index(alg.unit());
  t.top = index(alg.top());
  return TableAlgebra(std::move(t));
}

}  // namespace orthodyn

#endif  // ORTHODYN_TABLE_ALGEBRA_HPP_
