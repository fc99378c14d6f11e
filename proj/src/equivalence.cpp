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

#include "orthodyn/equivalence.hpp"

#include <algorithm>

namespace orthodyn {

OrthoMorphism mu_component(const GammaAlgebra& gamma, const TildeLattice<GammaAlgebra>& psi) {
  const OrthoLattice& L = gamma.lattice();
  OrthoMorphism mu{gamma.monoid()->lattice(), psi.lattice, {}};
  for (Elem m = 0; m < L.size(); ++m) {
    auto idx = psi.tilde.index_of(gamma.projection(m));
    if (!idx) {
      throw VerificationError("mu", "{π_m} is not in K̃", {"image", {m}, {L.name(m)}, ""});
    }
    mu.map.push_back(static_cast<Elem>(*idx));
  }
  return mu;
}

Verdict check_mu_naturality(const OrthoMorphism& k, const OrthoMorphism& mu_source,
                            const OrthoMorphism& mu_target, const OrthoMorphism& psi_gamma_k) {
  Verdict v;
  for (Elem m = 0; m < k.map.size(); ++m) {
    if (psi_gamma_k(mu_source(m)) != mu_target(k(m))) {
      v.result.fail({"square", {m}, {k.source->name(m)}, "Ψ(Γ(k))(μ(m)) != μ(k(m))"});
    }
  }
  return v;
}

const char* status_name(StageStatus s) {
  switch (s) {
    case StageStatus::kPass: return "pass";
    case StageStatus::kFail: return "fail";
    case StageStatus::kSkipped: return "skipped";
  }
  return "?";
}

bool RoundtripReport::passed() const {
  return !stages.empty() && std::all_of(stages.begin(), stages.end(), [](const StageReport& s) {
    return s.status == StageStatus::kPass;
  });
}

const StageReport* RoundtripReport::stage(std::string_view name) const {
  for (const auto& s : stages) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

class Pipeline {
 public:
  explicit Pipeline(RoundtripReport& report) : report_(report) {
    for (const char* name : kRoundtripStages) {
      StageReport st;
      st.name = name;
      report_.stages.push_back(std::move(st));
    }
  }

  /// Runs `body` for the next stage unless an earlier one failed. Hard
  /// errors become a failed stage.
  template <class Body>
  void run(Body&& body) {
    StageReport& st = report_.stages[next_++];
    if (failed_) return;
    try {
      body(st);
    } catch (const VerificationError& e) {
      st.witnesses.push_back(e.witness());
      st.witnesses.back().detail = e.what();
    } catch (const Error& e) {
      st.witnesses.push_back({"error", {}, {}, e.what()});
    }
    st.status = st.witnesses.empty() ? StageStatus::kPass : StageStatus::kFail;
    failed_ = st.status == StageStatus::kFail;
  }

 private:
  RoundtripReport& report_;
  std::size_t next_ = 0;
  bool failed_ = false;
};

void absorb(StageReport& st, const CheckResult& r, const std::string& prefix = "") {
  for (auto v : r.violations()) {
    if (!prefix.empty()) v.clause = prefix + "." + v.clause;
    st.witnesses.push_back(std::move(v));
  }
}

void absorb(StageReport& st, const Verdict& v, const std::string& prefix = "") {
  absorb(st, v.result, prefix);
  st.exhaustive = st.exhaustive && v.exhaustive;
  st.samples += v.samples;
}

/// Distinct draws per automorphism, still fixed by the global seed.
Budget morphism_budget(Budget each, std::size_t i) {
  each.seed = splitmix64(each.seed ^ splitmix64(i + 1));
  return each;
}

CheckResult named(const OrthoLattice& L, const CheckResult& r) {
  CheckResult out;
  for (auto v : r.violations()) {
    if (v.elements.empty()) {
      for (auto i : v.indices) v.elements.push_back(L.name(static_cast<Elem>(i)));
    }
    out.fail(std::move(v));
  }
  return out;
}

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

RoundtripReport roundtrip(const LatticePtr& lattice, std::string lattice_id, const Budget& budget) {
  RoundtripReport report;
  report.lattice_id = std::move(lattice_id);
  report.lattice_size = lattice->size();
  report.seed = budget.seed;
  report.samples = budget.samples;
  report.exhaustive_threshold = budget.exhaustive_threshold;
  Pipeline pipe(report);
  const OrthoLattice& L = *lattice;

  MonoidPtr monoid;
  std::unique_ptr<GammaAlgebra> gamma;
  std::optional<TildeLattice<GammaAlgebra>> psi;
  OrthoMorphism mu;
  std::optional<LambdaComponent<GammaAlgebra>> lambda;
  std::vector<OrthoMorphism> autos;
  std::vector<GammaMorphism> arrows;

  pipe.run([&](StageReport& st) {
    const CheckResult om = named(L, check_orthomodular(L));
    const CheckResult adj = named(L, check_adjunction(L));
    absorb(st, named(L, check_ortholattice(L)));
    absorb(st, om);
    absorb(st, adj);
    if (om.passed() != adj.passed()) {
      st.witnesses.push_back({"adjunction_agreement", {}, {}, "adjunction and orthomodularity disagree"});
    }
    if (om.passed()) absorb(st, named(L, check_join_preservation(L, 3)));
    st.facts.emplace_back("size", as_int(L.size()));
  });

  pipe.run([&](StageReport& st) {
    monoid = std::make_shared<const SasakiMonoid>(SasakiMonoid::build(lattice));
    absorb(st, check_involutive_monoid(*monoid, budget));
    absorb(st, check_star_adjointness(*monoid));
    std::size_t max_len = 0;
    for (const auto& [len, count] : monoid->word_length_histogram()) max_len = std::max(max_len, len);
    st.facts.emplace_back("size", as_int(monoid->size()));
    st.facts.emplace_back("generators", as_int(L.size()));
    st.facts.emplace_back("audited_collisions", as_int(monoid->audit().size()));
    st.facts.emplace_back("max_word_length", as_int(max_len));
    const auto n = monoid->size();
    st.exhaustive = tuple_count(n, 3) <= budget.exhaustive_threshold;
    if (!st.exhaustive) st.samples = budget.samples;
  });

  pipe.run([&](StageReport& st) {
    gamma = std::make_unique<GammaAlgebra>(monoid);
    const Tilde<GammaAlgebra> tilde = tilde_set(*gamma);
    std::vector<DynSet> projections;
    for (Elem m = 0; m < L.size(); ++m) projections.push_back(gamma->projection(m));
    std::sort(projections.begin(), projections.end());
    projections.erase(std::unique(projections.begin(), projections.end()), projections.end());
    if (tilde.elements() != projections) {
      st.witnesses.push_back({"tilde_singletons", {}, {}, "K̃ is not {{π_m} : m ∈ M}"});
    }
    const TildeSpan<GammaAlgebra> span = tilde_span(*gamma, tilde);
    std::vector<DynSet> singletons;
    for (MonoidIndex f = 0; f < monoid->size(); ++f) singletons.push_back(gamma->singleton(f));
    std::sort(singletons.begin(), singletons.end());
    if (span.elements != singletons) {
      st.witnesses.push_back({"span_singletons", {}, {}, "⟨K̃⟩ is not {{s} : s ∈ S_M}"});
    }
    Verdict dn;
    detail::for_each_tuple<GammaAlgebra, 1>(*gamma, budget, "gamma.double_negation", dn,
                                            [&](const std::array<DynSet, 1>& t) {
      if (!(gamma->neg(gamma->neg(t[0])) == gamma->projection(gamma->top_join(t[0])))) {
        dn.result.fail(detail::witness(*gamma, "double_negation", "∼∼A != {π_(⋁ a(1))}", t[0]));
      }
    });
    absorb(st, dn);
    st.facts.emplace_back("carrier_log2", gamma->carrier_log2());
    st.facts.emplace_back("tilde_size", as_int(tilde.size()));
    st.facts.emplace_back("span_size", as_int(span.size()));
  });

  pipe.run([&](StageReport& st) {
    report.foda = check_foda(*gamma, budget);
    for (const auto& ax : report.foda->axioms) absorb(st, ax.verdict, ax.id);
  });

  pipe.run([&](StageReport& st) {
    psi = psi_object(*gamma);
    const TildeLattice<GammaAlgebra>& tl = *psi;
    Verdict q = check_quote_homomorphism(*gamma, tl.tilde, *tl.lattice, 3, budget);
    absorb(st, q, "quote");
    st.facts.emplace_back("size", as_int(tl.lattice->size()));
  });

  pipe.run([&](StageReport& st) {
    mu = mu_component(*gamma, *psi);
    absorb(st, check_ortho_iso(mu));
    const OrthoMorphism back = inverse(mu);
    for (Elem m = 0; m < L.size(); ++m) {
      if (back(mu(m)) != m) st.witnesses.push_back({"inverse", {m}, {L.name(m)}, "μ⁻¹(μ(m)) != m"});
    }
  });

  pipe.run([&](StageReport& st) {
    lambda = lambda_component(*gamma, *psi);
    absorb(st, check_lambda_component(*lambda, budget));
    st.facts.emplace_back("target_monoid_size", as_int(lambda->target->universe()));
  });

  pipe.run([&](StageReport& st) {
    autos = enumerate_automorphisms(lattice);
    st.facts.emplace_back("automorphisms", as_int(autos.size()));
    Budget each = budget;
    each.samples = std::max<std::uint64_t>(kMinSamplesPerMorphism, budget.samples / autos.size());
    absorb(st, check_gamma_functor_laws(*gamma, autos, budget), "gamma");
    std::vector<FodaMorphism<GammaAlgebra, GammaAlgebra>> phis;
    for (const auto& k : autos) {
      arrows.push_back(gamma_arrow(k, *gamma, *gamma));
      phis.push_back(arrows.back().as_foda());
    }
    for (std::size_t i = 0; i < autos.size(); ++i) {
      const Budget bi = morphism_budget(each, i);
      absorb(st, check_foda_morphism(phis[i], *psi, *psi, bi), "gamma_arrow");
      const GammaMorphism inv = gamma_arrow(inverse(autos[i]), *gamma, *gamma);
      absorb(st, check_gamma_equivariance(arrows[i], inv, bi), "gamma_arrow");
    }
    absorb(st, check_psi_functor_laws(*psi, phis), "psi");
  });

  pipe.run([&](StageReport& st) {
    Budget each = budget;
    each.samples = std::max<std::uint64_t>(kMinSamplesPerMorphism, budget.samples / autos.size());
    for (std::size_t i = 0; i < autos.size(); ++i) {
      const auto phi = arrows[i].as_foda();
      const OrthoMorphism psi_k = psi_arrow(phi, *psi, *psi);
      absorb(st, check_mu_naturality(autos[i], mu, mu, psi_k), "mu");
      absorb(st, check_lambda_naturality(phi, *lambda, *lambda, morphism_budget(each, i)), "lambda");
    }
  });
  return report;
}

}  // namespace orthodyn
