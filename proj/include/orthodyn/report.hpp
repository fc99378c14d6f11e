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

// JSON and text renderings of check results and reports. JSON key order is
// fixed, so equal reports serialize to equal bytes.

#ifndef ORTHODYN_REPORT_HPP_
#define ORTHODYN_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "orthodyn/check.hpp"
#include "orthodyn/equivalence.hpp"
#include "orthodyn/foda.hpp"
#include "orthodyn/sasaki_monoid.hpp"

namespace orthodyn {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const Violation& v);
[[nodiscard]] Json to_json(const CheckResult& r);
/// {"status", "mode", "samples"?, "seed"?, "witnesses"}
[[nodiscard]] Json to_json(const Verdict& v, std::uint64_t seed);
[[nodiscard]] Json to_json(const FodaReport& report);
[[nodiscard]] Json to_json(const RoundtripReport& report);
/// Size, generator count, witness-word length histogram, audit status.
[[nodiscard]] Json monoid_json(const SasakiMonoid& monoid);

[[nodiscard]] std::string to_text(const Violation& v);
[[nodiscard]] std::string to_text(const FodaReport& report);
[[nodiscard]] std::string to_text(const RoundtripReport& report);

}  // namespace orthodyn

#endif  // ORTHODYN_REPORT_HPP_
