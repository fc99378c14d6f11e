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

// Ψ on objects and arrows, and the functor laws for Γ and Ψ over a list of
// isomorphisms.

#ifndef ORTHODYN_FUNCTORS_HPP_
#define ORTHODYN_FUNCTORS_HPP_

#include <string>
#include <vector>

#include "orthodyn/dynamic_algebra.hpp"
#include "orthodyn/foda.hpp"
#include "orthodyn/gamma.hpp"
#include "orthodyn/lattice.hpp"

namespace orthodyn {

/// Ψ(K) = (K̃, ⪯, ∼). Throws VerificationError (stage "psi") unless it is
/// an orthomodular lattice.
template <DynamicAlgebra K>
TildeLattice<K> psi_object(const K& alg) {
  TildeLattice<K> tl = build_tilde_lattice(alg);
  if (!tl.lattice) {
    const auto& v = tl.problems.violations();
    throw VerificationError("psi", "K̃ is not a bounded lattice under ⪯",
                            v.empty() ? Violation{"lattice", {}, {}, ""} : v.front());
  }
  CheckResult r = check_ortholattice(*tl.lattice);
  r.merge(check_orthomodular(*tl.lattice));
  if (!r.passed()) {
    Violation w = r.violations().front();
    for (auto i : w.indices) w.elements.push_back(alg.format(tl.tilde.elements()[i]));
    throw VerificationError("psi", "(K̃, ⪯, ∼) is not orthomodular", w);
  }
  return tl;
}

/// Ψ(φ): the restriction of φ to K̃₁ -> K̃₂. Throws VerificationError
/// (stage "psi_arrow") when φ does not map K̃₁ into K̃₂.
template <DynamicAlgebra Src, DynamicAlgebra Dst>
OrthoMorphism psi_arrow(const FodaMorphism<Src, Dst>& phi, const TildeLattice<Src>& from,
                        const TildeLattice<Dst>& to) {
  auto r = restrict_to_tilde(phi, from, to);
  if (!r) throw VerificationError("psi_arrow", "φ(K̃₁) ⊄ K̃₂", {"tilde", {}, {}, ""});
  return std::move(*r);
}

/// Γ(id) = id, and Γ(l ∘ k) = Γ(l) ∘ Γ(k) for every ordered pair from
/// `isos` (automorphisms of the algebra's lattice). Each pair is checked on
/// ∅, every singleton, and seeded samples; on every carrier element when the
/// total stays under the threshold. Clauses "identity", "composition".
[[nodiscard]] Verdict check_gamma_functor_laws(const GammaAlgebra& gamma,
                                               const std::vector<OrthoMorphism>& isos,
                                               const Budget& budget = {});

/// Ψ(id) = id, and Ψ(φ ∘ ψ) = Ψ(φ) ∘ Ψ(ψ) for every ordered pair of
/// endomorphisms, checked on all of K̃; each Ψ(φ) must pass
/// check_ortho_iso. Clauses "identity", "composition", "iso".
template <DynamicAlgebra K>
Verdict check_psi_functor_laws(const TildeLattice<K>& tl,
                               const std::vector<FodaMorphism<K, K>>& morphisms) {
  Verdict v;
  const K* alg = morphisms.empty() ? nullptr : morphisms.front().source;
  auto elem = [&](Elem i) { return alg ? alg->format(tl.tilde.elements()[i]) : std::to_string(i); };
  if (alg) {
    const OrthoMorphism id = psi_arrow(identity_morphism(*alg), tl, tl);
    for (Elem i = 0; i < id.map.size(); ++i) {
      if (id(i) != i) v.result.fail({"identity", {}, {elem(i)}, "Ψ(id)(k) != k"});
    }
  }
  std::vector<OrthoMorphism> psi;
  for (const auto& phi : morphisms) {
    psi.push_back(psi_arrow(phi, tl, tl));
    for (auto viol : check_ortho_iso(psi.back()).violations()) {
      viol.clause = "iso." + viol.clause;
      v.result.fail(std::move(viol));
    }
  }
  for (std::size_t a = 0; a < morphisms.size(); ++a) {
    for (std::size_t b = 0; b < morphisms.size(); ++b) {
      const OrthoMorphism lhs = psi_arrow(compose(morphisms[a], morphisms[b]), tl, tl);
      const OrthoMorphism rhs = compose(psi[a], psi[b]);
      for (Elem i = 0; i < lhs.map.size(); ++i) {
        if (lhs(i) != rhs(i)) {
          v.result.fail({"composition", {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)},
                         {elem(i)}, "Ψ(φ ∘ ψ)(k) != Ψ(φ)(Ψ(ψ)(k))"});
        }
      }
    }
  }
  return v;
}

}  // namespace orthodyn

#endif  // ORTHODYN_FUNCTORS_HPP_
