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

#include "orthodyn/table_algebra.hpp"

#include <charconv>
#include <cmath>

namespace orthodyn {

TableAlgebra::TableAlgebra(AlgebraTables tables) : t_(std::move(tables)) {
  const std::size_t n = t_.size;
  if (n == 0 || n > kTableAlgebraLimit) {
    throw InputError("algebra size must be in 1.." + std::to_string(kTableAlgebraLimit));
  }
  auto check = [&](const std::vector<std::uint32_t>& v, std::size_t len, const char* what) {
    if (v.size() != len) throw InputError(std::string(what) + ": wrong table size");
    for (auto x : v) {
      if (x >= n) throw InputError(std::string(what) + ": entry " + std::to_string(x) + " out of range");
    }
  };
  check(t_.join, n * n, "join");
  check(t_.mul, n * n, "mul");
  check(t_.neg, n, "neg");
  check(t_.star, n, "star");
  check({t_.zero, t_.unit, t_.top}, 3, "zero/unit/top");
  if (!t_.names.empty() && t_.names.size() != n) throw InputError("names: wrong length");
}

double TableAlgebra::carrier_log2() const { return std::log2(static_cast<double>(t_.size)); }

std::string TableAlgebra::format(Element a) const {
  return t_.names.empty() ? std::to_string(a) : t_.names[a];
}

TableAlgebra::Element TableAlgebra::parse_element(std::string_view text) const {
  for (std::size_t i = 0; i < t_.names.size(); ++i) {
    if (t_.names[i] == text) return static_cast<Element>(i);
  }
  Element value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value >= t_.size) {
    throw InputError("unknown algebra element: " + std::string(text));
  }
  return value;
}

}  // namespace orthodyn
