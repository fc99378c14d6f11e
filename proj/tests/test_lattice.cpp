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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "orthodyn/catalog.hpp"
#include "orthodyn/lattice.hpp"

using namespace orthodyn;

namespace {

// MO2 indices: 0, a, a', b, b', 1.
constexpr Elem kA = 1, kAp = 2, kB = 3, kBp = 4, kTop = 5;

std::vector<LatticePtr> catalog() {
  std::vector<LatticePtr> out;
  for (int n = 0; n <= 4; ++n) out.push_back(share(gen_boolean(n)));
  for (int n = 1; n <= 4; ++n) out.push_back(share(gen_mo(n)));
  out.push_back(share(gen_o6()));
  out.push_back(share(gen_product(gen_mo(2), gen_boolean(1))));
  out.push_back(share(gen_product(gen_o6(), gen_boolean(1))));
  return out;
}

}  // namespace

TEST_CASE("two-element chain builds as B1") {
  const std::vector<std::pair<Elem, Elem>> leq{{0, 1}};
  const OrthoLattice L = OrthoLattice::build(2, leq, {1, 0});
  CHECK(L.size() == 2);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 1);
  CHECK(L.meet(0, 1) == 0);
  CHECK(L.join(0, 1) == 1);
}

TEST_CASE("MO2 tables agree with the search oracle") {
  const OrthoLattice L = gen_mo(2);
  const oracle::Poset P(L);
  for (Elem i = 0; i < L.size(); ++i) {
    for (Elem j = 0; j < L.size(); ++j) {
      CHECK(L.meet(i, j) == P.meet(i, j));
      CHECK(L.join(i, j) == P.join(i, j));
    }
  }
  CHECK(check_ortholattice(L).passed());
}

TEST_CASE("bottom and top are inferred wherever they are") {
  // 2 < 0 < 1 with ortho swapping 2 and 1.
  const std::vector<std::pair<Elem, Elem>> leq{{2, 0}, {0, 1}};
  const OrthoLattice L = OrthoLattice::build(3, leq, {0, 2, 1}, {}, OrthoLaws::kSkip);
  CHECK(L.bottom() == 2);
  CHECK(L.top() == 1);
}

TEST_CASE("malformed orders are rejected with a witness") {
  using K = LatticeError::Kind;
  SUBCASE("two-cycle") {
    const std::vector<std::pair<Elem, Elem>> leq{{0, 1}, {1, 0}};
    try {
      (void)OrthoLattice::build(2, leq, {1, 0});
      FAIL("expected an antisymmetry error");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == K::kAntisymmetry);
      CHECK(e.witness() == std::pair<std::int64_t, std::int64_t>{0, 1});
    }
  }
  SUBCASE("no least element") {
    const std::vector<std::pair<Elem, Elem>> leq{{0, 2}, {1, 2}};
    try {
      (void)OrthoLattice::build(3, leq, {1, 0, 2}, {}, OrthoLaws::kSkip);
      FAIL("expected an error");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == K::kNoBottom);
    }
  }
  SUBCASE("missing join") {
    // 0 < a, b < c, d < 1: a and b have two minimal upper bounds.
    const std::vector<std::pair<Elem, Elem>> leq{{0, 1}, {0, 2}, {1, 3}, {1, 4},
                                                 {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    try {
      (void)OrthoLattice::build(6, leq, {5, 4, 3, 2, 1, 0}, {}, OrthoLaws::kSkip);
      FAIL("expected an error");
    } catch (const LatticeError& e) {
      CHECK((e.kind() == K::kNoJoin || e.kind() == K::kNoMeet));
      CHECK(e.witness().first >= 0);
    }
  }
  SUBCASE("ortho not a permutation") {
    const std::vector<std::pair<Elem, Elem>> leq{{0, 1}};
    try {
      (void)OrthoLattice::build(2, leq, {1, 1});
      FAIL("expected an error");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == K::kNotPermutation);
    }
  }
  SUBCASE("ortholattice laws enforced") {
    const std::vector<std::pair<Elem, Elem>> leq{{0, 1}};
    try {
      (void)OrthoLattice::build(2, leq, {0, 1});
      FAIL("expected an error");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == K::kOrtho);
    }
  }
}

TEST_CASE("check_ortholattice") {
  CHECK(check_ortholattice(gen_boolean(2)).passed());
  CHECK(check_ortholattice(gen_o6()).passed());
  // B2 with ortho = identity.
  const std::vector<std::pair<Elem, Elem>> leq{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const OrthoLattice bad = OrthoLattice::build(4, leq, {0, 1, 2, 3}, {}, OrthoLaws::kSkip);
  const CheckResult r = check_ortholattice(bad);
  REQUIRE(r.has("complement"));
  const Violation* v = r.first("complement");
  REQUIRE(!v->indices.empty());
  const Elem m = static_cast<Elem>(v->indices.front());
  CHECK((bad.meet(m, bad.ortho(m)) != bad.bottom() || bad.join(m, bad.ortho(m)) != bad.top()));
}

TEST_CASE("check_orthomodular") {
  CHECK(check_orthomodular(gen_mo(2)).passed());
  for (int n = 0; n <= 5; ++n) CHECK(check_orthomodular(gen_boolean(n)).passed());
  const OrthoLattice o6 = gen_o6();
  const CheckResult r = check_orthomodular(o6);
  REQUIRE(r.has("orthomodular"));
  CHECK(r.first("orthomodular")->indices == std::vector<std::int64_t>{1, 2});
  CHECK(o6.join(1, o6.meet(o6.ortho(1), 2)) == 1);
}

TEST_CASE("orthomodularity matches the oracle on every catalog lattice") {
  for (const auto& L : catalog()) {
    CHECK(check_orthomodular(*L).passed() == oracle::Poset(*L).orthomodular());
  }
}

TEST_CASE("Sasaki projection examples") {
  const OrthoLattice L = gen_mo(2);
  CHECK(sasaki_projection(L, L.top()) == EndoMap::identity(L.size()));
  for (Elem m = 0; m < L.size(); ++m) CHECK(sasaki_projection(L, m)(L.top()) == m);
  CHECK(sasaki_projection(L, kA)(kB) == kA);
}

TEST_CASE("Sasaki hook examples") {
  const OrthoLattice L = gen_mo(2);
  const EndoMap at_bottom = sasaki_hook(L, L.bottom());
  for (Elem x = 0; x < L.size(); ++x) CHECK(at_bottom(x) == L.top());
  CHECK(sasaki_hook(L, L.top()) == EndoMap::identity(L.size()));
  CHECK(sasaki_hook(L, kA)(kB) == kAp);
}

TEST_CASE("adjunction agrees with orthomodularity") {
  for (const auto& L : catalog()) {
    CHECK(check_adjunction(*L).passed() == check_orthomodular(*L).passed());
  }
  CHECK(check_adjunction(gen_boolean(1)).passed());
  const CheckResult r = check_adjunction(gen_o6());
  REQUIRE(r.has("adjunction"));
  CHECK(r.first("adjunction")->indices.size() == 3);
}

TEST_CASE("join preservation") {
  const OrthoLattice L = gen_mo(2);
  CHECK(check_join_preservation(L, 3).passed());
  CHECK(L.project(kA, L.join(kB, kBp)) == L.join(L.project(kA, kB), L.project(kA, kBp)));
  for (Elem m = 0; m < L.size(); ++m) CHECK(L.project(m, L.bottom()) == L.bottom());
  CHECK(check_join_preservation(gen_mo(4), 2).passed());
}

TEST_CASE("Sasaki operation properties on every orthomodular catalog lattice") {
  for (const auto& Lp : catalog()) {
    const OrthoLattice& L = *Lp;
    if (!check_orthomodular(L).passed()) continue;
    for (Elem m = 0; m < L.size(); ++m) {
      const EndoMap p = sasaki_projection(L, m);
      CHECK(p.after(p) == p);
      for (Elem x = 0; x < L.size(); ++x) {
        CHECK(L.leq(p(x), m));
        CHECK(sasaki_hook(L, m)(x) == L.ortho(p(L.ortho(x))));
        for (Elem y = 0; y < L.size(); ++y) {
          if (L.leq(x, y)) CHECK(L.leq(p(x), p(y)));
        }
      }
    }
  }
}

TEST_CASE("ortho-lattice isomorphism clauses on MO2") {
  const LatticePtr L = share(gen_mo(2));
  CHECK(check_ortho_iso(OrthoMorphism::identity(L)).passed());
  CHECK(check_ortho_iso({L, L, {0, kB, kBp, kA, kAp, kTop}}).passed());
  // Exchanging a and a' alone commutes with ⊥ and preserves the order.
  CHECK(check_ortho_iso({L, L, {0, kAp, kA, kB, kBp, kTop}}).passed());
  const CheckResult r = check_ortho_iso({L, L, {0, kB, kAp, kA, kBp, kTop}});
  CHECK(r.has("ortho"));
  CHECK_FALSE(r.has("order"));
  CHECK(check_ortho_iso({L, L, {0, kA, kA, kB, kBp, kTop}}).has("bijective"));
}

TEST_CASE("size mismatch is reported on its own") {
  const LatticePtr a = share(gen_mo(2));
  const LatticePtr b = share(gen_boolean(2));
  const CheckResult r = check_ortho_iso({a, b, {0, 1, 2, 3, 3, 3}});
  REQUIRE(r.violations().size() == 1);
  CHECK(r.violations().front().clause == "size");
}

TEST_CASE("automorphism counts match brute force over all permutations") {
  CHECK(enumerate_automorphisms(share(gen_boolean(1))).size() == 1);
  CHECK(enumerate_automorphisms(share(gen_boolean(2))).size() == 2);
  for (const auto& L : {share(gen_boolean(3)), share(gen_mo(2)), share(gen_mo(3)), share(gen_o6())}) {
    const auto autos = enumerate_automorphisms(L);
    CHECK(autos.size() == oracle::automorphism_count(*L));
    CHECK(std::is_sorted(autos.begin(), autos.end(),
                         [](const auto& x, const auto& y) { return x.map < y.map; }));
    for (const auto& k : autos) CHECK(check_ortho_iso(k).passed());
  }
  CHECK(enumerate_automorphisms(share(gen_mo(2))).size() == 8);
  CHECK(enumerate_automorphisms(share(gen_boolean(4))).size() == 24);
}

TEST_CASE("automorphism search refuses oversized lattices") {
  CHECK_THROWS_AS((void)enumerate_automorphisms(share(gen_boolean(5))), InputError);
}

TEST_CASE("conjugating a projection by an automorphism moves its index") {
  for (const auto& L : {share(gen_mo(2)), share(gen_mo(3)), share(gen_boolean(3))}) {
    for (const auto& k : enumerate_automorphisms(L)) {
      const OrthoMorphism kinv = inverse(k);
      for (Elem m = 0; m < L->size(); ++m) {
        const EndoMap p = sasaki_projection(*L, m);
        const EndoMap q = sasaki_projection(*L, k(m));
        for (Elem x = 0; x < L->size(); ++x) CHECK(k(p(kinv(x))) == q(x));
      }
    }
  }
}

TEST_CASE("morphism composition and inverse") {
  const LatticePtr L = share(gen_mo(2));
  const auto autos = enumerate_automorphisms(L);
  for (const auto& k : autos) {
    const OrthoMorphism id = compose(inverse(k), k);
    CHECK(id.map == OrthoMorphism::identity(L).map);
  }
}
