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

// Deterministic sampling: every draw is a pure function of
// (seed, stream, counter), so results do not depend on evaluation order.

#ifndef ORTHODYN_SAMPLING_HPP_
#define ORTHODYN_SAMPLING_HPP_

#include <cstdint>
#include <limits>
#include <string_view>

namespace orthodyn {

/// Exhaustive enumeration is used whenever the relevant tuple count is at
/// most `exhaustive_threshold`; otherwise `samples` seeded draws are made.
struct Budget {
  std::uint64_t exhaustive_threshold = std::uint64_t{1} << 20;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Stable 64-bit id for a named stream ("foda1.mul_associative", ...).
[[nodiscard]] std::uint64_t stream_id(std::string_view name) noexcept;

/// Small generator seeded from (seed, stream, counter).
class SampleRng {
 public:
  using result_type = std::uint64_t;

  SampleRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
      : state_(splitmix64(seed ^ splitmix64(stream ^ splitmix64(counter)))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ull;
    return splitmix64(state_);
  }

  /// Uniform in [0, bound); bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform in [0, 1).
  double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Number of k-tuples over a carrier of `size` elements, saturating.
[[nodiscard]] std::uint64_t tuple_count(std::uint64_t size, unsigned arity) noexcept;

}  // namespace orthodyn

#endif  // ORTHODYN_SAMPLING_HPP_
