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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mutants.hpp"
#include "oracles.hpp"
#include "orthodyn/catalog.hpp"
#include "orthodyn/cli.hpp"
#include "orthodyn/equivalence.hpp"
#include "orthodyn/functors.hpp"
#include "orthodyn/report.hpp"

using namespace orthodyn;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

std::string first_witness(const CheckResult& r) {
  if (r.passed()) return "none";
  return to_text(r.violations().front());
}

int run_quiet(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

// 1. Orthomodularity discrimination.
Outcome criterion1() {
  Outcome c;
  const std::vector<std::string> positive{"boolean:1", "boolean:2", "boolean:3", "boolean:4",
                                          "mo:1",      "mo:2",      "mo:3",      "product(mo:2,boolean:1)"};
  for (const auto& spec : positive) {
    c.require(run_quiet({"verify-oml", "catalog:" + spec}) == kExitPass, spec + " rejected");
    const OrthoLattice L = catalog_lattice(spec);
    c.require(check_adjunction(L).passed() == check_orthomodular(L).passed(), spec + " adjunction disagrees");
    c.require(oracle::Poset(L).orthomodular(), spec + " oracle disagrees");
  }
  c.require(run_quiet({"verify-oml", "catalog:o6"}) == kExitFail, "o6 accepted");
  const OrthoLattice o6 = gen_o6();
  const CheckResult r = check_orthomodular(o6);
  c.require(r.has("orthomodular") && r.first("orthomodular")->indices.size() == 2, "o6 has no witness pair");
  c.require(!check_adjunction(o6).passed(), "o6 adjunction passes");
  c.require(!oracle::Poset(o6).orthomodular(), "o6 oracle disagrees");
  if (c.pass) c.note = "8 positive, o6 witness " + first_witness(r);
  return c;
}

// 2. Involutive monoid.
Outcome criterion2() {
  Outcome c;
  std::string sizes;
  for (const char* spec : {"boolean:1", "boolean:2", "boolean:3", "mo:2", "mo:3"}) {
    const LatticePtr L = share(catalog_lattice(spec));
    const SasakiMonoid S = SasakiMonoid::build(L);
    std::size_t failures = 0;
    for (const auto& a : S.audit()) failures += a.consistent ? 0 : 1;
    c.require(failures == 0, std::string(spec) + " audit failures");
    const CheckResult r = check_involutive_monoid(S);
    c.require(r.passed(), std::string(spec) + " " + first_witness(r));
    c.require(check_star_adjointness(S).passed(), std::string(spec) + " adjointness");
    const std::size_t expected = oracle::monoid_closure(oracle::Poset(*L)).size();
    c.require(S.size() == expected, std::string(spec) + " size differs from oracle");
    if (std::string(spec).starts_with("boolean:")) {
      c.require(S.size() == std::size_t{1} << (spec[8] - '0'), std::string(spec) + " |S| is not 2^n");
    }
    sizes += std::string(sizes.empty() ? "" : " ") + spec + "=" + std::to_string(S.size());
  }
  if (c.pass) c.note = "|S|: " + sizes;
  return c;
}

// 3. Γ is a FODA.
Outcome criterion3() {
  Outcome c;
  for (int n : {1, 2}) {
    const GammaAlgebra g = GammaAlgebra::build(share(gen_boolean(n)));
    const FodaReport r = check_foda(g);
    c.require(r.passed(), "boolean:" + std::to_string(n) + " fails");
    for (const auto& a : r.axioms) c.require(a.verdict.exhaustive, "boolean:" + std::to_string(n) + " sampled");
  }
  const GammaAlgebra g = GammaAlgebra::build(share(gen_mo(2)));
  const FodaReport r = check_foda(g);
  for (int i = 1; i <= 7; ++i) {
    const AxiomReport& a = r.axiom(i);
    c.require(a.verdict.passed(), "mo:2 FODA " + std::to_string(i) + " " + first_witness(a.verdict.result));
  }
  for (int i : {2, 5, 6}) c.require(r.axiom(i).verdict.exhaustive, "mo:2 FODA " + std::to_string(i) + " sampled");
  for (int i : {4, 7}) {
    const Verdict& v = r.axiom(i).verdict;
    c.require(v.exhaustive || v.samples >= 10000, "mo:2 FODA " + std::to_string(i) + " undersampled");
  }
  if (c.pass) {
    c.note = "mo:2 FODA 4/7 " + std::string(r.axiom(4).verdict.exhaustive ? "exhaustive" : "sampled") + "/" +
             (r.axiom(7).verdict.exhaustive ? "exhaustive" : "sampled") + " at " +
             std::to_string(r.axiom(7).verdict.samples) + " samples";
  }
  return c;
}

// 4. Normal form.
Outcome criterion4() {
  Outcome c;
  {
    const GammaAlgebra g = GammaAlgebra::build(share(gen_boolean(2)));
    const TildeSpan<GammaAlgebra> span = tilde_span(g, tilde_set(g));
    for (std::uint64_t i = 0; i < *g.carrier_size(); ++i) {
      const DynSet k = g.element_at(i);
      // Oracle: every subset of ⟨K̃⟩ whose union is k.
      std::vector<std::vector<DynSet>> hits;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << span.size()); ++bits) {
        std::vector<DynSet> s;
        DynSet acc = g.zero();
        for (std::size_t j = 0; j < span.size(); ++j) {
          if (bits >> j & 1) {
            s.push_back(span.elements[j]);
            acc = g.join(acc, span.elements[j]);
          }
        }
        if (acc == k) hits.push_back(s);
      }
      c.require(hits.size() == 1 && decompose(g, span, k) == hits.front(), "boolean:2 element " + g.format(k));
    }
  }
  const GammaAlgebra g = GammaAlgebra::build(share(gen_mo(2)));
  const TildeSpan<GammaAlgebra> span = tilde_span(g, tilde_set(g));
  const auto id = stream_id("acceptance_normal_form");
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    SampleRng rng(0, id, i);
    const DynSet k = g.sample(rng);
    try {
      const auto parts = decompose(g, span, k);
      bad += join_all<GammaAlgebra>(g, parts) == k ? 0 : 1;
    } catch (const AlgebraError&) {
      ++bad;
    }
  }
  c.require(bad == 0, std::to_string(bad) + " mo:2 samples without recomposition");
  if (c.pass) c.note = "16/16 exhaustive, 10000 mo:2 samples";
  return c;
}

// 5. Quotation laws.
Outcome criterion5() {
  Outcome c;
  const LatticePtr L = share(gen_mo(2));
  const GammaAlgebra g = GammaAlgebra::build(L);
  const oracle::Poset P(*L);
  for (Elem m = 0; m < L->size(); ++m)
    for (Elem n = 0; n < L->size(); ++n)
      c.require(quote(g, g.projection(m), g.projection(n)) == g.projection(P.project(m, n)),
                "projection law at " + L->names()[m] + "," + L->names()[n]);
  const auto id = stream_id("acceptance_quote_double_negation");
  for (std::uint64_t i = 0; i < 10000 && c.pass; ++i) {
    SampleRng rng(0, id, i);
    const DynSet a = g.sample(rng);
    const DynSet b = g.sample(rng);
    c.require(quote(g, a, b) == quote(g, a, g.neg(g.neg(b))), "double negation at " + g.format(a) + "," + g.format(b));
  }
  const TildeLattice<GammaAlgebra> psi = psi_object(g);
  const Verdict h = check_quote_homomorphism(g, psi.tilde, *psi.lattice, 4, Budget{});
  c.require(h.passed(), "homomorphism " + first_witness(h.result));
  if (c.pass) c.note = "36 K̃ pairs, 10000 sampled pairs, words up to length 4";
  return c;
}

// 6. Equivalence round trip.
Outcome criterion6() {
  Outcome c;
  for (const char* spec : {"boolean:1", "boolean:2", "mo:2", "mo:3"}) {
    const RoundtripReport r = roundtrip(share(catalog_lattice(spec)), spec);
    c.require(r.passed(), std::string(spec) + " fails");
    c.require(run_quiet({"roundtrip", std::string("catalog:") + spec}) == kExitPass, std::string(spec) + " exit");
  }
  if (c.pass) c.note = "4 lattices, library and CLI";
  return c;
}

// 7. Mutation sensitivity.
Outcome criterion7() {
  Outcome c;
  const LatticePtr L = share(gen_mo(2));
  const GammaAlgebra g = GammaAlgebra::build(L);
  Budget b;
  b.samples = 2000;
  auto caught = [](const FodaReport& r) -> std::string {
    for (const auto& a : r.axioms)
      if (!a.verdict.passed()) return a.id + " " + to_text(a.verdict.result.violations().front());
    return "";
  };
  const std::string a = caught(check_foda(mutants::StarIdentity(g), b));
  const std::string n = caught(check_foda(mutants::NegWithoutComplement(g), b));
  c.require(!a.empty(), "star mutant survives");
  c.require(!n.empty(), "neg mutant survives");
  const TildeLattice<GammaAlgebra> tl = build_tilde_lattice(g);
  std::string t;
  for (const auto& k : enumerate_automorphisms(L)) {
    const Verdict v = check_foda_morphism(mutants::translation(g, k), tl, tl, b);
    if (!v.passed()) {
      t = to_text(v.result.violations().front());
      break;
    }
  }
  c.require(!t.empty(), "translation mutant survives");
  if (c.pass) c.note = "(a) " + a + " | (b) " + n + " | (c) " + t;
  return c;
}

// 8. Determinism.
Outcome criterion8() {
  Outcome c;
  const std::vector<std::string> args{"roundtrip", "catalog:mo2", "--seed", "7", "--format", "json"};
  std::string first, second;
  c.require(run_quiet(args, &first) == kExitPass, "first run failed");
  c.require(run_quiet(args, &second) == kExitPass, "second run failed");
  c.require(!first.empty() && first == second, "reports differ");
  if (c.pass) c.note = std::to_string(first.size()) + " identical bytes";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"orthomodularity discrimination", criterion1},
      {"involutive monoid", criterion2},
      {"Γ is a FODA", criterion3},
      {"normal form", criterion4},
      {"quotation laws", criterion5},
      {"equivalence round trip", criterion6},
      {"mutation sensitivity", criterion7},
      {"determinism", criterion8},
  };
  bool all = true;
  int number = 0;
  for (const auto& [name, fn] : criteria) {
    ++number;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", number, name, secs, o.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
