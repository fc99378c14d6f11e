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

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "orthodyn/catalog.hpp"
#include "orthodyn/sasaki_monoid.hpp"

using namespace orthodyn;

namespace {

constexpr Elem kA = 1, kAp = 2, kB = 3, kBp = 4, kTop = 5;

SasakiMonoid monoid_of(OrthoLattice L) { return SasakiMonoid::build(share(std::move(L))); }

std::set<oracle::Fn> functions(const SasakiMonoid& S) {
  std::set<oracle::Fn> out;
  for (MonoidIndex f = 0; f < S.size(); ++f) {
    const auto v = S.element(f).values();
    out.emplace(v.begin(), v.end());
  }
  return out;
}

}  // namespace

TEST_CASE("B1 monoid is {id, const-bottom}") {
  const SasakiMonoid S = monoid_of(gen_boolean(1));
  CHECK(S.size() == 2);
  CHECK(S.element(S.identity()) == EndoMap::identity(2));
  CHECK(S.find(EndoMap({0, 0})).has_value());
}

TEST_CASE("Boolean monoids are the meet maps x -> m ∧ x") {
  for (int n = 1; n <= 4; ++n) {
    const LatticePtr L = share(gen_boolean(n));
    const SasakiMonoid S = SasakiMonoid::build(L);
    CHECK(S.size() == (std::size_t{1} << n));
    for (MonoidIndex f = 0; f < S.size(); ++f) {
      const Elem m = S.element(f)(L->top());
      for (Elem x = 0; x < L->size(); ++x) CHECK(S.element(f)(x) == L->meet(m, x));
    }
  }
}

TEST_CASE("closure matches the fixpoint oracle") {
  for (auto L : {gen_boolean(3), gen_mo(1), gen_mo(2), gen_mo(3), gen_product(gen_mo(2), gen_boolean(1))}) {
    const oracle::Poset P(L);
    const SasakiMonoid S = monoid_of(L);
    CHECK(functions(S) == oracle::monoid_closure(P));
  }
}

TEST_CASE("monoid sizes") {
  CHECK(monoid_of(gen_mo(1)).size() == 4);
  CHECK(monoid_of(gen_mo(2)).size() == 18);
  CHECK(monoid_of(gen_mo(3)).size() == 38);
  CHECK(monoid_of(gen_mo(4)).size() == 66);
}

TEST_CASE("generators come first and witness words are sound and shortest") {
  for (auto L : {gen_mo(2), gen_mo(3), gen_boolean(3)}) {
    const oracle::Poset P(L);
    const SasakiMonoid S = monoid_of(L);
    const auto lengths = oracle::word_lengths(P);
    std::set<Elem> distinct_values;
    for (Elem m = 0; m < L.size(); ++m) {
      CHECK(S.element(S.generator(m)) == sasaki_projection(L, m));
    }
    for (MonoidIndex f = 0; f < S.size(); ++f) {
      const Word& w = S.witness_word(f);
      CHECK(S.evaluate_map(w) == S.element(f));
      CHECK(S.evaluate(w) == f);
      const auto v = S.element(f).values();
      CHECK(w.size() == lengths.at(oracle::Fn(v.begin(), v.end())));
    }
  }
}

TEST_CASE("compose examples on MO2") {
  const SasakiMonoid S = monoid_of(gen_mo(2));
  const MonoidIndex id = S.identity();
  for (MonoidIndex f = 0; f < S.size(); ++f) {
    CHECK(S.compose(id, f) == f);
    CHECK(S.compose(f, id) == f);
  }
  const EndoMap ab = S.element(S.compose(S.generator(kA), S.generator(kB)));
  for (Elem x : {kA, kAp, kB, kTop}) CHECK(ab(x) == kA);
  for (Elem x : {Elem{0}, kBp}) CHECK(ab(x) == 0);
  const OrthoLattice& L = *S.lattice();
  for (Elem m = 0; m < L.size(); ++m) {
    const EndoMap z = S.element(S.compose(S.generator(m), S.generator(L.ortho(m))));
    for (Elem x = 0; x < L.size(); ++x) CHECK(z(x) == L.bottom());
  }
}

TEST_CASE("star examples on MO2") {
  const SasakiMonoid S = monoid_of(gen_mo(2));
  for (Elem m = 0; m < 6; ++m) CHECK(S.star(S.generator(m)) == S.generator(m));
  CHECK(S.star(S.identity()) == S.identity());
  const MonoidIndex ab = S.compose(S.generator(kA), S.generator(kB));
  const MonoidIndex ba = S.compose(S.generator(kB), S.generator(kA));
  CHECK(ab != ba);
  CHECK(S.star(ab) == ba);
}

TEST_CASE("star matches the adjoint characterization") {
  for (auto L : {gen_mo(2), gen_mo(3), gen_boolean(3)}) {
    const oracle::Poset P(L);
    const SasakiMonoid S = monoid_of(L);
    const auto all = functions(S);
    const oracle::GammaSets G{P};
    for (MonoidIndex f = 0; f < S.size(); ++f) {
      const auto v = S.element(f).values();
      const auto w = S.element(S.star(f)).values();
      CHECK(G.adjoint(oracle::Fn(v.begin(), v.end()), all) == oracle::Fn(w.begin(), w.end()));
    }
  }
}

TEST_CASE("involutive monoid laws") {
  for (auto L : {gen_boolean(1), gen_boolean(2), gen_mo(2), gen_mo(3)}) {
    const SasakiMonoid S = monoid_of(L);
    CHECK(check_involutive_monoid(S).passed());
    CHECK(check_star_adjointness(S).passed());
  }
}

TEST_CASE("associativity is sampled above the threshold") {
  const SasakiMonoid S = monoid_of(gen_mo(3));
  Budget b;
  b.exhaustive_threshold = 1000;
  b.samples = 2000;
  CHECK(check_involutive_monoid(S, b).passed());
}

TEST_CASE("the word-reversal audit records consistent collisions") {
  const SasakiMonoid S = monoid_of(gen_mo(2));
  CHECK_FALSE(S.audit().empty());
  for (const auto& entry : S.audit()) {
    CHECK(entry.consistent);
    CHECK(S.evaluate(entry.word) == entry.reached);
    const Word reversed(entry.word.rbegin(), entry.word.rend());
    CHECK(S.evaluate(reversed) == S.star(entry.reached));
  }
}

TEST_CASE("meet-orthogonality is not preserved by the involution") {
  // f(x) ∧ y = 0 and x ∧ f*(y) = 0 disagree for f = π_a, x = 1, y = b.
  const OrthoLattice L = gen_mo(2);
  const EndoMap f = sasaki_projection(L, kA);
  CHECK(L.meet(f(kTop), kB) == 0);
  CHECK(L.meet(kTop, f(kB)) != 0);
}

TEST_CASE("non-orthomodular input is refused") {
  CHECK_THROWS_AS((void)monoid_of(gen_o6()), MonoidError);
}

TEST_CASE("closure size cap") {
  MonoidOptions opts;
  opts.size_cap = 10;
  CHECK_THROWS_AS((void)SasakiMonoid::build(share(gen_mo(2)), opts), MonoidError);
}

TEST_CASE("on-demand composition agrees with the table") {
  const LatticePtr L = share(gen_mo(2));
  MonoidOptions no_table;
  no_table.table_limit = 0;
  const SasakiMonoid a = SasakiMonoid::build(L);
  const SasakiMonoid b = SasakiMonoid::build(L, no_table);
  for (MonoidIndex f = 0; f < a.size(); ++f)
    for (MonoidIndex g = 0; g < a.size(); ++g) CHECK(a.compose(f, g) == b.compose(f, g));
}

TEST_CASE("word length histogram covers every element") {
  const SasakiMonoid S = monoid_of(gen_mo(3));
  std::size_t total = 0;
  for (const auto& [len, count] : S.word_length_histogram()) total += count;
  CHECK(total == S.size());
}
