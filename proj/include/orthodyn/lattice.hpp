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

// Finite ortholattices: construction from an order relation, the
// ortholattice and orthomodularity checkers, Sasaki operations, and
// ortho-lattice isomorphisms.

#ifndef ORTHODYN_LATTICE_HPP_
#define ORTHODYN_LATTICE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orthodyn/check.hpp"
#include "orthodyn/endo_map.hpp"

namespace orthodyn {

/// Raised when an order relation cannot be turned into a bounded lattice
/// with an orthocomplement permutation.
class LatticeError : public InputError {
 public:
  enum class Kind {
    kShape,          // sizes or index ranges wrong
    kAntisymmetry,   // i <= j and j <= i with i != j
    kNoBottom,
    kNoTop,
    kNoMeet,
    kNoJoin,
    kNotPermutation,
    kOrtho,          // ortholattice law violated (only when enforced)
  };

  LatticeError(Kind kind, std::string what, std::int64_t a = -1,
               std::int64_t b = -1)
      : InputError(std::move(what)), kind_(kind), a_(a), b_(b) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] std::pair<std::int64_t, std::int64_t> witness() const noexcept {
    return {a_, b_};
  }

 private:
  Kind kind_;
  std::int64_t a_;
  std::int64_t b_;
};

enum class OrthoLaws {
  kEnforce,  // build fails unless complementation, antitonicity, involution hold
  kSkip,     // only structural checks; used for negative test material
};

/// A finite bounded lattice with an orthocomplement permutation.
///
/// Immutable after construction. The order is stored as a full boolean
/// matrix and meets/joins as precomputed tables.
class OrthoLattice {
 public:
  /// Builds from `i <= j` pairs over `0..n-1`. Reflexive pairs may be
  /// omitted; the reflexive-transitive closure is taken and then validated.
  static OrthoLattice build(std::size_t n,
                            std::span<const std::pair<Elem, Elem>> leq_pairs,
                            std::vector<Elem> ortho,
                            std::vector<std::string> names = {},
                            OrthoLaws laws = OrthoLaws::kEnforce);

  /// Same, from a full order matrix (row-major, n*n).
  static OrthoLattice from_matrix(std::size_t n, std::vector<bool> leq,
                                  std::vector<Elem> ortho,
                                  std::vector<std::string> names = {},
                                  OrthoLaws laws = OrthoLaws::kEnforce);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool leq(Elem a, Elem b) const { return leq_[a * n_ + b]; }
  [[nodiscard]] Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  [[nodiscard]] Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  [[nodiscard]] Elem ortho(Elem a) const { return ortho_[a]; }
  [[nodiscard]] Elem bottom() const noexcept { return bottom_; }
  [[nodiscard]] Elem top() const noexcept { return top_; }

  /// Empty join is bottom, empty meet is top.
  [[nodiscard]] Elem join_all(std::span<const Elem> xs) const;
  [[nodiscard]] Elem meet_all(std::span<const Elem> xs) const;

  [[nodiscard]] const std::vector<std::string>& names() const noexcept {
    return names_;
  }
  /// Display label; falls back to the index.
  [[nodiscard]] std::string name(Elem a) const;
  [[nodiscard]] std::optional<Elem> find_name(std::string_view label) const;

  /// m ∧ (m⊥ ∨ n)
  [[nodiscard]] Elem project(Elem m, Elem n) const {
    return meet(m, join(ortho(m), n));
  }
  /// m⊥ ∨ (m ∧ n)
  [[nodiscard]] Elem hook(Elem m, Elem n) const {
    return join(ortho(m), meet(m, n));
  }

  /// Number of elements below (resp. above) `a`, inclusive.
  [[nodiscard]] std::size_t down_count(Elem a) const { return down_[a]; }
  [[nodiscard]] std::size_t up_count(Elem a) const { return up_[a]; }

  /// Equal as indexed structures (names ignored).
  [[nodiscard]] bool same_structure(const OrthoLattice& other) const;

 private:
  OrthoLattice() = default;

  std::size_t n_ = 0;
  std::vector<bool> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> ortho_;
  std::vector<std::size_t> down_;
  std::vector<std::size_t> up_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::string> names_;
};

using LatticePtr = std::shared_ptr<const OrthoLattice>;

inline LatticePtr share(OrthoLattice lattice) {
  return std::make_shared<const OrthoLattice>(std::move(lattice));
}

/// Clauses "complement", "antitone", "involution"; first witness per clause.
[[nodiscard]] CheckResult check_ortholattice(const OrthoLattice& lattice);

/// Clause "orthomodular" with the first (m, n), m <= n, in index order such
/// that n != m ∨ (m⊥ ∧ n).
[[nodiscard]] CheckResult check_orthomodular(const OrthoLattice& lattice);

[[nodiscard]] EndoMap sasaki_projection(const OrthoLattice& lattice, Elem m);
[[nodiscard]] EndoMap sasaki_hook(const OrthoLattice& lattice, Elem m);

/// Clause "adjunction" with the first (m, x, y) where
/// π_m(x) <= y and x <= hook_m(y) disagree.
[[nodiscard]] CheckResult check_adjunction(const OrthoLattice& lattice);

/// Lattices up to this size get every subset in check_join_preservation.
inline constexpr std::size_t kJoinPreservationExhaustive = 12;

/// π_m(⋁A) = ⋁ π_m(A) for every m and every A with |A| <= max_subset_size
/// (every A when the lattice is small enough). Clause "join_preservation".
[[nodiscard]] CheckResult check_join_preservation(const OrthoLattice& lattice,
                                                  std::size_t max_subset_size);

/// A map between two lattices, meant to be an ortho-lattice isomorphism.
struct OrthoMorphism {
  LatticePtr source;
  LatticePtr target;
  std::vector<Elem> map;

  [[nodiscard]] Elem operator()(Elem m) const { return map[m]; }

  static OrthoMorphism identity(LatticePtr lattice);
};

/// `second ∘ first`; the target of `first` must be the source of `second`.
[[nodiscard]] OrthoMorphism compose(const OrthoMorphism& second,
                                    const OrthoMorphism& first);
/// Requires a bijection.
[[nodiscard]] OrthoMorphism inverse(const OrthoMorphism& f);

/// Clauses "size" (length or cardinality mismatch, reported alone),
/// "bijective", "order", "ortho", and the corollaries "join", "meet".
[[nodiscard]] CheckResult check_ortho_iso(const OrthoMorphism& f);

/// Largest lattice accepted by enumerate_automorphisms.
inline constexpr std::size_t kAutomorphismSizeGuard = 24;

/// All ortho-lattice automorphisms in lexicographic order of their maps.
[[nodiscard]] std::vector<OrthoMorphism> enumerate_automorphisms(
    const LatticePtr& lattice);

/// All ortho-lattice isomorphisms between two lattices (same search).
[[nodiscard]] std::vector<OrthoMorphism> enumerate_isomorphisms(
    const LatticePtr& source, const LatticePtr& target);

}  // namespace orthodyn

#endif  // ORTHODYN_LATTICE_HPP_
