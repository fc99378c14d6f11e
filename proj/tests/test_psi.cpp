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

#include "doctest.h"
#include "mutants.hpp"
#include "orthodyn/catalog.hpp"
#include "orthodyn/equivalence.hpp"
#include "orthodyn/functors.hpp"
#include "orthodyn/table_algebra.hpp"

using namespace orthodyn;

TEST_CASE("Ψ(Γ(B1)) has two elements") {
  const GammaAlgebra g = GammaAlgebra::build(share(gen_boolean(1)));
  const TildeLattice<GammaAlgebra> psi = psi_object(g);
  CHECK(psi.lattice->size() == 2);
}

TEST_CASE("Ψ(Γ(M)) is isomorphic to M") {
  for (auto Lv : {gen_mo(2), gen_mo(3), gen_boolean(3), gen_product(gen_mo(2), gen_boolean(1))}) {
    const LatticePtr L = share(Lv);
    const GammaAlgebra g = GammaAlgebra::build(L);
    const TildeLattice<GammaAlgebra> psi = psi_object(g);
    CHECK(check_orthomodular(*psi.lattice).passed());
    CHECK_FALSE(enumerate_isomorphisms(L, psi.lattice).empty());
  }
}

TEST_CASE("Ψ of an explicit algebra is the lattice of its ∼-image") {
  const TableAlgebra t = materialize(GammaAlgebra::build(share(gen_boolean(2))));
  const TildeLattice<TableAlgebra> psi = psi_object(t);
  CHECK(psi.lattice->size() == tilde_set(t).size());
  CHECK(psi.lattice->size() == 4);
  CHECK_FALSE(enumerate_isomorphisms(share(gen_boolean(2)), psi.lattice).empty());
}

TEST_CASE("Ψ is undefined when K̃ is not orthomodular") {
  const GammaAlgebra base = GammaAlgebra::build(share(gen_mo(2)));
  const mutants::NegWithoutComplement g(base);
  CHECK_THROWS_AS((void)psi_object(g), VerificationError);
}

TEST_CASE("Ψ(id) = id") {
  const GammaAlgebra g = GammaAlgebra::build(share(gen_mo(2)));
  const TildeLattice<GammaAlgebra> psi = psi_object(g);
  const OrthoMorphism id = psi_arrow(identity_morphism(g), psi, psi);
  CHECK(id.map == OrthoMorphism::identity(psi.lattice).map);
}

TEST_CASE("Ψ(Γ(k)) = δ ∘ k ∘ δ⁻¹ on K̃") {
  const LatticePtr L = share(gen_mo(3));
  const GammaAlgebra g = GammaAlgebra::build(L);
  const TildeLattice<GammaAlgebra> psi = psi_object(g);
  const OrthoMorphism delta = mu_component(g, psi);
  for (const auto& k : enumerate_automorphisms(L)) {
    const OrthoMorphism pk = psi_arrow(gamma_arrow(k, g, g).as_foda(), psi, psi);
    const OrthoMorphism expected = compose(delta, compose(k, inverse(delta)));
    CHECK(pk.map == expected.map);
    CHECK(check_ortho_iso(pk).passed());
  }
}

TEST_CASE("functor laws over the automorphism group") {
  for (auto Lv : {gen_boolean(2), gen_mo(2), gen_mo(3)}) {
    const LatticePtr L = share(Lv);
    const GammaAlgebra g = GammaAlgebra::build(L);
    const auto autos = enumerate_automorphisms(L);
    Budget b;
    b.samples = 2000;
    CHECK(check_gamma_functor_laws(g, autos, b).passed());
    const TildeLattice<GammaAlgebra> psi = psi_object(g);
    std::vector<GammaMorphism> arrows;
    for (const auto& k : autos) arrows.push_back(gamma_arrow(k, g, g));
    std::vector<FodaMorphism<GammaAlgebra, GammaAlgebra>> phis;
    for (const auto& a : arrows) phis.push_back(a.as_foda());
    CHECK(check_psi_functor_laws(psi, phis).passed());
  }
}

TEST_CASE("identity-only morphism lists pass") {
  const LatticePtr L = share(gen_mo(2));
  const GammaAlgebra g = GammaAlgebra::build(L);
  CHECK(check_gamma_functor_laws(g, {OrthoMorphism::identity(L)}).passed());
  const TildeLattice<GammaAlgebra> psi = psi_object(g);
  CHECK(check_psi_functor_laws(psi, {identity_morphism(g)}).passed());
}

TEST_CASE("Γ functor laws detect a wrong composite") {
  // Declaring the translation mutant's partial map as Γ(k) breaks
  // composition: compare Γ(k∘k) against the translation applied twice.
  const LatticePtr L = share(gen_mo(2));
  const GammaAlgebra g = GammaAlgebra::build(L);
  const OrthoMorphism swap{L, L, {0, 3, 4, 1, 2, 5}};
  const auto t = mutants::translation(g, swap);
  const GammaMorphism kk = gamma_arrow(compose(swap, swap), g, g);
  bool differs = false;
  for (MonoidIndex f = 0; f < g.universe(); ++f) {
    const auto once = t(g.singleton(f));
    const auto twice = once ? t(*once) : std::nullopt;
    differs = differs || !twice || !(*twice == kk(g.singleton(f)));
  }
  CHECK(differs);
}
