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

// The monoid generated by the Sasaki projections of an orthomodular
// lattice, with the word-reversal involution.

#ifndef ORTHODYN_SASAKI_MONOID_HPP_
#define ORTHODYN_SASAKI_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orthodyn/check.hpp"
#include "orthodyn/endo_map.hpp"
#include "orthodyn/lattice.hpp"
#include "orthodyn/sampling.hpp"

namespace orthodyn {

/// Index of an element of a SasakiMonoid.
using MonoidIndex = std::uint32_t;

/// A generator word m_1 ... m_j, read as π_{m_1} ∘ ... ∘ π_{m_j}.
using Word = std::vector<Elem>;

/// Raised when the closure exceeds its cap, the input is not orthomodular,
/// or the word-reversal audit finds two words whose reversals disagree.
class MonoidError : public Error {
 public:
  using Error::Error;
};

struct MonoidOptions {
  std::size_t size_cap = 100000;
  /// Composition is tabulated up to this many elements, computed on demand
  /// above it.
  std::size_t table_limit = 4096;
};

/// One word that reached an already-known function during the closure, with
/// the outcome of comparing its reversal against the stored involution.
struct AuditEntry {
  Word word;
  MonoidIndex reached;
  bool consistent;
};

class SasakiMonoid {
 public:
  /// Breadth-first closure from {π_m}. Element i's witness word is the
  /// shortest, then lexicographically least, word reaching it; generators
  /// come first so generator(m) == m.
  static SasakiMonoid build(LatticePtr lattice, MonoidOptions options = {});

  [[nodiscard]] const LatticePtr& lattice() const noexcept { return lattice_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }

  [[nodiscard]] const EndoMap& element(MonoidIndex f) const {
    return elements_.at(f);
  }
  [[nodiscard]] MonoidIndex generator(Elem m) const {
    return generator_of_.at(m);
  }
  [[nodiscard]] MonoidIndex identity() const noexcept { return identity_; }
  [[nodiscard]] const Word& witness_word(MonoidIndex f) const {
    return witness_.at(f);
  }

  /// Index of f ∘ g.
  [[nodiscard]] MonoidIndex compose(MonoidIndex f, MonoidIndex g) const;
  [[nodiscard]] MonoidIndex star(MonoidIndex f) const { return star_of_.at(f); }

  [[nodiscard]] std::optional<MonoidIndex> find(const EndoMap& f) const;

  /// Index of the composite of a generator word (empty word is identity).
  [[nodiscard]] MonoidIndex evaluate(const Word& word) const;

  /// Pointwise evaluation of a word directly in the lattice.
  [[nodiscard]] EndoMap evaluate_map(const Word& word) const;

  [[nodiscard]] const std::vector<AuditEntry>& audit() const noexcept {
    return audit_;
  }
  /// Word length -> number of elements whose witness has that length.
  [[nodiscard]] std::map<std::size_t, std::size_t> word_length_histogram()
      const;

 private:
  SasakiMonoid() = default;

  LatticePtr lattice_;
  std::vector<EndoMap> elements_;
  std::unordered_map<EndoMap, MonoidIndex, EndoMapHash> index_;
  std::vector<MonoidIndex> generator_of_;
  std::vector<Word> witness_;
  std::vector<MonoidIndex> star_of_;
  std::vector<MonoidIndex> compose_table_;  // empty when above table_limit
  MonoidIndex identity_ = 0;
  std::vector<AuditEntry> audit_;
};

using MonoidPtr = std::shared_ptr<const SasakiMonoid>;

/// Clauses "associative" (function-level, exhaustive over triples under the
/// threshold, sampled above), "identity", "star_involution",
/// "star_antihom", "star_generator", "closure", "witness".
[[nodiscard]] CheckResult check_involutive_monoid(
    const SasakiMonoid& monoid, const Budget& budget = {});

/// Orthogonality adjointness of the involution: f(x) <= y⊥ iff
/// x <= f*(y)⊥. Clause "orthogonality_adjoint".
[[nodiscard]] CheckResult check_star_adjointness(const SasakiMonoid& monoid);

}  // namespace orthodyn

#endif  // ORTHODYN_SASAKI_MONOID_HPP_
