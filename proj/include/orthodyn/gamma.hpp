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

// Γ on objects and arrows: the powerset algebra over a Sasaki monoid, and
// conjugation by an ortho-lattice isomorphism.

#ifndef ORTHODYN_GAMMA_HPP_
#define ORTHODYN_GAMMA_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthodyn/dynamic_algebra.hpp"
#include "orthodyn/foda.hpp"
#include "orthodyn/lattice.hpp"
#include "orthodyn/sampling.hpp"
#include "orthodyn/sasaki_monoid.hpp"

namespace orthodyn {

/// A finite subset of a Sasaki monoid, stored as a fixed-width bitset over
/// the monoid's indices. Equal sets have equal representations.
class DynSet {
 public:
  DynSet() = default;
  explicit DynSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}

  static DynSet from_members(std::size_t universe, std::span<const MonoidIndex> members);
  /// Bit i of `mask` selects monoid element i; universe <= 64.
  static DynSet from_mask(std::size_t universe, std::uint64_t mask);
  static DynSet full(std::size_t universe);

  [[nodiscard]] std::size_t universe() const noexcept { return universe_; }
  [[nodiscard]] bool contains(MonoidIndex i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void insert(MonoidIndex i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(MonoidIndex i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] bool empty() const noexcept;

  /// Members in ascending order.
  [[nodiscard]] std::vector<MonoidIndex> members() const;
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
        fn(static_cast<MonoidIndex>(w * 64 + static_cast<unsigned>(__builtin_ctzll(bits))));
      }
    }
  }

  DynSet& operator|=(const DynSet& other);

  friend bool operator==(const DynSet&, const DynSet&) = default;
  friend auto operator<=>(const DynSet&, const DynSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Γ(M) = (𝒫(S_M), ∪, ⊙, ∼, *, {π_1}).
class GammaAlgebra {
 public:
  using Element = DynSet;

  explicit GammaAlgebra(MonoidPtr monoid);
  /// Builds S_M first; throws MonoidError when M is not orthomodular.
  static GammaAlgebra build(LatticePtr lattice, MonoidOptions options = {});

  [[nodiscard]] const MonoidPtr& monoid() const noexcept { return monoid_; }
  [[nodiscard]] const OrthoLattice& lattice() const { return *monoid_->lattice(); }
  [[nodiscard]] std::size_t universe() const noexcept { return monoid_->size(); }

  [[nodiscard]] DynSet zero() const { return DynSet(universe()); }
  [[nodiscard]] DynSet top() const { return DynSet::full(universe()); }
  [[nodiscard]] DynSet unit() const { return projection(lattice().top()); }
  [[nodiscard]] DynSet join(const DynSet& a, const DynSet& b) const;
  /// {a ∘ b | a ∈ A, b ∈ B}
  [[nodiscard]] DynSet mul(const DynSet& a, const DynSet& b) const;
  /// {π_m} with m = (⋁_{a ∈ A} a(1))⊥; ∼∅ = {π_1}.
  [[nodiscard]] DynSet neg(const DynSet& a) const;
  [[nodiscard]] DynSet star(const DynSet& a) const;

  [[nodiscard]] std::optional<std::uint64_t> carrier_size() const;
  [[nodiscard]] double carrier_log2() const { return static_cast<double>(universe()); }
  [[nodiscard]] DynSet element_at(std::uint64_t i) const;
  /// Cardinality-stratified: half the draws have at most three members.
  [[nodiscard]] DynSet sample(SampleRng& rng) const;
  [[nodiscard]] std::string format(const DynSet& a) const;
  /// Accepts "{}", "{3,7}" (monoid indices).
  [[nodiscard]] DynSet parse_element(std::string_view text) const;
  /// ∅ and the generator singletons cover every value of ∼.
  [[nodiscard]] std::vector<DynSet> neg_cover() const;

  [[nodiscard]] DynSet singleton(MonoidIndex f) const;
  [[nodiscard]] DynSet projection(Elem m) const { return singleton(monoid_->generator(m)); }
  /// ⋁_{a ∈ A} a(1)
  [[nodiscard]] Elem top_join(const DynSet& a) const;

 private:
  MonoidPtr monoid_;
};

static_assert(DynamicAlgebra<GammaAlgebra>);
static_assert(HasNegCover<GammaAlgebra>);

/// Γ(k): A ↦ {k ∘ a ∘ k⁻¹ | a ∈ A}, stored as the induced permutation of
/// monoid indices.
struct GammaMorphism {
  const GammaAlgebra* source = nullptr;
  const GammaAlgebra* target = nullptr;
  std::vector<MonoidIndex> sigma;

  [[nodiscard]] DynSet operator()(const DynSet& a) const;
  [[nodiscard]] FodaMorphism<GammaAlgebra, GammaAlgebra> as_foda() const;
};

/// Conjugates generator by generator: the image of an element with witness
/// word m_1 ... m_j is the target element of k(m_1) ... k(m_j). Every image
/// is cross-checked against k ∘ f ∘ k⁻¹ pointwise; a mismatch throws
/// VerificationError (stage "gamma_arrow").
[[nodiscard]] GammaMorphism gamma_arrow(const OrthoMorphism& k, const GammaAlgebra& source,
                                        const GammaAlgebra& target);

/// Γ(k)(∼A) = ∼Γ(k)(A) for all A (exhaustive under the threshold), plus
/// Γ(k⁻¹) ∘ Γ(k) = id and Γ(k) ∘ Γ(k⁻¹) = id. `inverse` must be
/// gamma_arrow of k⁻¹. Clauses "equivariance", "left_inverse",
/// "right_inverse".
[[nodiscard]] Verdict check_gamma_equivariance(const GammaMorphism& gk, const GammaMorphism& inverse,
                                               const Budget& budget = {});

}  // namespace orthodyn

#endif  // ORTHODYN_GAMMA_HPP_
