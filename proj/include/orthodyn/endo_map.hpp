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

#ifndef ORTHODYN_ENDO_MAP_HPP_
#define ORTHODYN_ENDO_MAP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace orthodyn {

/// Dense element index of a finite lattice.
using Elem = std::uint32_t;

/// A total map on the elements of one lattice, stored as its value vector.
/// Equality is entrywise, so the representation is canonical.
class EndoMap {
 public:
  EndoMap() = default;
  explicit EndoMap(std::vector<Elem> values) : values_(std::move(values)) {}

  static EndoMap identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] Elem operator()(Elem x) const { return values_[x]; }
  [[nodiscard]] std::span<const Elem> values() const noexcept {
    return values_;
  }

  /// x -> (*this)(g(x)), i.e. this ∘ g.
  [[nodiscard]] EndoMap after(const EndoMap& g) const;

  friend auto operator<=>(const EndoMap&, const EndoMap&) = default;

 private:
  std::vector<Elem> values_;
};

struct EndoMapHash {
  std::size_t operator()(const EndoMap& f) const noexcept;
};

}  // namespace orthodyn

#endif  // ORTHODYN_ENDO_MAP_HPP_
