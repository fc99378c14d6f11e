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

#include "orthodyn/functors.hpp"

#include <algorithm>

namespace orthodyn {

Verdict check_gamma_functor_laws(const GammaAlgebra& gamma, const std::vector<OrthoMorphism>& isos,
                                 const Budget& budget) {
  Verdict v;
  const LatticePtr& L = gamma.monoid()->lattice();
  const GammaMorphism id = gamma_arrow(OrthoMorphism::identity(L), gamma, gamma);
  detail::for_each_tuple<GammaAlgebra, 1>(gamma, budget, "gamma.functor.identity", v,
                                          [&](const std::array<DynSet, 1>& t) {
    if (!(id(t[0]) == t[0])) v.result.fail(detail::witness(gamma, "identity", "Γ(id)(A) != A", t[0]));
  });

  std::vector<GammaMorphism> arrows;
  for (const auto& k : isos) arrows.push_back(gamma_arrow(k, gamma, gamma));
  const std::uint64_t pairs = std::max<std::uint64_t>(1, isos.size() * isos.size());
  const auto n = gamma.carrier_size();
  const bool exhaustive = n && *n <= budget.exhaustive_threshold / pairs;
  const std::uint64_t per_pair = std::max<std::uint64_t>(16, budget.samples / pairs);
  if (!exhaustive) {
    v.exhaustive = false;
    v.samples = std::max(v.samples, per_pair * pairs);
  }
  std::vector<DynSet> fixed{gamma.zero()};
  for (MonoidIndex f = 0; f < gamma.universe(); ++f) fixed.push_back(gamma.singleton(f));
  const auto stream = stream_id("gamma.functor.composition");
  std::uint64_t counter = 0;

  for (std::size_t a = 0; a < isos.size(); ++a) {
    for (std::size_t b = 0; b < isos.size(); ++b) {
      const GammaMorphism lk = gamma_arrow(compose(isos[a], isos[b]), gamma, gamma);
      auto probe = [&](const DynSet& x) {
        if (!(lk(x) == arrows[a](arrows[b](x)))) {
          v.result.fail(detail::witness(gamma, "composition", "Γ(l ∘ k)(A) != Γ(l)(Γ(k)(A))", x));
        }
      };
      if (exhaustive) {
        for (std::uint64_t i = 0; i < *n; ++i) probe(gamma.element_at(i));
        continue;
      }
      for (const auto& x : fixed) probe(x);
      for (std::uint64_t s = 0; s < per_pair; ++s) {
        SampleRng rng(budget.seed, stream, counter++);
        probe(gamma.sample(rng));
      }
    }
  }
  return v;
}

}  // namespace orthodyn
