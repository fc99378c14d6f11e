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

#include "orthodyn/check.hpp"

#include <algorithm>

namespace orthodyn {

void CheckResult::fail(Violation v) {
  auto same = std::count_if(
      violations_.begin(), violations_.end(),
      [&](const Violation& x) { return x.clause == v.clause; });
  if (static_cast<std::size_t>(same) < kMaxPerClause) {
    violations_.push_back(std::move(v));
  }
}

void CheckResult::merge(const CheckResult& other) {
  for (const auto& v : other.violations_) {
    fail(v);
  }
}

bool CheckResult::has(std::string_view clause) const noexcept {
  return first(clause) != nullptr;
}

const Violation* CheckResult::first(std::string_view clause) const noexcept {
  for (const auto& v : violations_) {
    if (v.clause == clause) {
      return &v;
    }
  }
  return nullptr;
}

}  // namespace orthodyn
