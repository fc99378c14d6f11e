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

// The natural isomorphisms μ and λ, their naturality squares, and the
// end-to-end round trip over a lattice and its automorphism group.

#ifndef ORTHODYN_EQUIVALENCE_HPP_
#define ORTHODYN_EQUIVALENCE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orthodyn/dynamic_algebra.hpp"
#include "orthodyn/foda.hpp"
#include "orthodyn/functors.hpp"
#include "orthodyn/gamma.hpp"
#include "orthodyn/lattice.hpp"
#include "orthodyn/sasaki_monoid.hpp"

namespace orthodyn {

/// μ_M = δ: m ↦ {π_m}, from M to Ψ(Γ(M)). Throws VerificationError (stage
/// "mu") if some {π_m} is not in K̃.
[[nodiscard]] OrthoMorphism mu_component(const GammaAlgebra& gamma,
                                         const TildeLattice<GammaAlgebra>& psi);

/// Ψ(Γ(k)) ∘ μ₁ = μ₂ ∘ k on every element. Clause "square".
[[nodiscard]] Verdict check_mu_naturality(const OrthoMorphism& k, const OrthoMorphism& mu_source,
                                          const OrthoMorphism& mu_target,
                                          const OrthoMorphism& psi_gamma_k);

/// λ_K: K -> Γ(Ψ(K)). An element k is decomposed into ⟨K̃⟩ elements and
/// each part s is sent to ⌜s⌝ restricted to K̃, an element of S_{Ψ(K)}.
template <DynamicAlgebra K>
struct LambdaComponent {
  const K* source = nullptr;
  TildeLattice<K> psi;
  TildeSpan<K> span;
  std::shared_ptr<const GammaAlgebra> target;
  std::vector<MonoidIndex> span_image;  // span index -> S_{Ψ(K)} index

  /// Throws AlgebraError when k has no decomposition.
  [[nodiscard]] DynSet operator()(const ElementOf<K>& k) const {
    DynSet out(target->universe());
    ElementOf<K> acc = source->zero();
    for (std::size_t i = 0; i < span.size(); ++i) {
      if (below(*source, span.elements[i], k)) {
        out.insert(span_image[i]);
        acc = source->join(acc, span.elements[i]);
      }
    }
    if (!(acc == k)) {
      throw AlgebraError("no decomposition into ⟨K̃⟩ elements exists for " + source->format(k));
    }
    return out;
  }

  [[nodiscard]] FodaMorphism<K, GammaAlgebra> as_foda() const {
    return {source, target.get(), [this](const ElementOf<K>& k) -> std::optional<DynSet> {
              try {
                return (*this)(k);
              } catch (const AlgebraError&) {
                return std::nullopt;
              }
            }};
  }
};

/// `psi` must be psi_object(alg). Throws VerificationError (stage
/// "lambda") when some ⌜s⌝ leaves K̃ or is not a Sasaki composite.
template <DynamicAlgebra K>
LambdaComponent<K> lambda_component(const K& alg, TildeLattice<K> psi) {
  LambdaComponent<K> out;
  out.source = &alg;
  out.psi = std::move(psi);
  out.span = tilde_span(alg, out.psi.tilde);
  out.target = std::make_shared<const GammaAlgebra>(GammaAlgebra::build(out.psi.lattice));
  const SasakiMonoid& S = *out.target->monoid();
  const auto& el = out.psi.tilde.elements();
  for (std::size_t i = 0; i < out.span.size(); ++i) {
    const auto& s = out.span.elements[i];
    std::vector<Elem> values;
    for (const auto& x : el) {
      auto idx = out.psi.tilde.index_of(quote(alg, s, x));
      if (!idx) {
        throw VerificationError("lambda", "⌜s⌝ leaves K̃", detail::witness(alg, "quote_closed", "", s, x));
      }
      values.push_back(static_cast<Elem>(*idx));
    }
    auto f = S.find(EndoMap(std::move(values)));
    if (!f) {
      throw VerificationError("lambda", "⌜s⌝ restricted to K̃ is not in S_{Ψ(K)}",
                              detail::witness(alg, "sasaki_composite", "", s));
    }
    out.span_image.push_back(*f);
  }
  return out;
}

/// Clauses:
///  "span_bijection": s ↦ ⌜s⌝|K̃ is a bijection ⟨K̃⟩ -> S_{Ψ(K)};
///  "word_agreement": it equals the Sasaki composite of the stored product
///    word of s;
///  "left_inverse" / "right_inverse": λ is a bijection, checked through the
///    inverse T ↦ ⊔{s : ⌜s⌝|K̃ ∈ T};
///  "normal_form": decompose(λ(k)) is the image of decompose(k);
///  and every FODA-morphism clause of check_foda_morphism.
template <DynamicAlgebra K>
Verdict check_lambda_component(const LambdaComponent<K>& lam, const Budget& budget = {}) {
  using E = ElementOf<K>;
  Verdict v;
  const K& alg = *lam.source;
  const GammaAlgebra& tgt = *lam.target;
  const SasakiMonoid& S = *tgt.monoid();

  std::vector<std::optional<std::size_t>> preimage(S.size());
  for (std::size_t i = 0; i < lam.span.size(); ++i) {
    auto& slot = preimage[lam.span_image[i]];
    if (slot) {
      v.result.fail(detail::witness(alg, "span_bijection", "two ⟨K̃⟩ elements with the same image",
                                    lam.span.elements[*slot], lam.span.elements[i]));
    }
    slot = i;
    Word w(lam.span.words[i].begin(), lam.span.words[i].end());
    if (S.evaluate(w) != lam.span_image[i]) {
      v.result.fail(detail::witness(alg, "word_agreement", "⌜s⌝|K̃ differs from its word's composite",
                                    lam.span.elements[i]));
    }
  }
  for (MonoidIndex f = 0; f < S.size(); ++f) {
    if (!preimage[f]) {
      v.result.fail({"span_bijection", {f}, {}, "monoid element not reached from ⟨K̃⟩"});
    }
  }
  if (!v.passed()) return v;

  auto inverse = [&](const DynSet& t) {
    E acc = alg.zero();
    t.for_each([&](MonoidIndex f) { acc = alg.join(acc, lam.span.elements[*preimage[f]]); });
    return acc;
  };
  const Tilde<GammaAlgebra> tgt_tilde = tilde_set(tgt);
  const TildeSpan<GammaAlgebra> tgt_span = tilde_span(tgt, tgt_tilde);

  detail::for_each_tuple<K, 1>(alg, budget, "lambda.left_inverse", v, [&](const std::array<E, 1>& t) {
    DynSet img;
    try {
      img = lam(t[0]);
    } catch (const AlgebraError&) {
      v.result.fail(detail::witness(alg, "left_inverse", "k has no decomposition", t[0]));
      return;
    }
    if (!(inverse(img) == t[0])) {
      v.result.fail(detail::witness(alg, "left_inverse", "λ⁻¹(λ(k)) != k", t[0]));
    }
    std::vector<DynSet> expected;
    img.for_each([&](MonoidIndex f) { expected.push_back(tgt.singleton(f)); });
    std::sort(expected.begin(), expected.end());
    try {
      if (decompose(tgt, tgt_span, img) != expected) {
        v.result.fail(detail::witness(alg, "normal_form", "decompose(λ(k)) != λ(decompose(k))", t[0]));
      }
    } catch (const AlgebraError&) {
      v.result.fail(detail::witness(alg, "normal_form", "λ(k) has no decomposition", t[0]));
    }
  });
  detail::for_each_tuple<GammaAlgebra, 1>(tgt, budget, "lambda.right_inverse", v,
                                          [&](const std::array<DynSet, 1>& t) {
    bool ok = false;
    try {
      ok = lam(inverse(t[0])) == t[0];
    } catch (const AlgebraError&) {
    }
    if (!ok) v.result.fail(detail::witness(tgt, "right_inverse", "λ(λ⁻¹(T)) != T", t[0]));
  });

  const TildeLattice<GammaAlgebra> tgt_lattice = build_tilde_lattice(tgt, tgt_tilde);
  Verdict m = check_foda_morphism(lam.as_foda(), lam.psi, tgt_lattice, budget);
  v.result.merge(m.result);
  v.exhaustive = v.exhaustive && m.exhaustive;
  v.samples = std::max(v.samples, m.samples);
  return v;
}

/// Γ(Ψ(φ))(λ₁(k)) = λ₂(φ(k)) for every k (sampled above the threshold).
/// Clause "square".
template <DynamicAlgebra K1, DynamicAlgebra K2>
Verdict check_lambda_naturality(const FodaMorphism<K1, K2>& phi, const LambdaComponent<K1>& l1,
                                const LambdaComponent<K2>& l2, const Budget& budget = {}) {
  using E = ElementOf<K1>;
  Verdict v;
  const OrthoMorphism psi_phi = psi_arrow(phi, l1.psi, l2.psi);
  const GammaMorphism gpsi = gamma_arrow(psi_phi, *l1.target, *l2.target);
  detail::for_each_tuple<K1, 1>(*l1.source, budget, "lambda.naturality", v,
                                [&](const std::array<E, 1>& t) {
    auto fk = phi(t[0]);
    bool ok = false;
    try {
      ok = fk && gpsi(l1(t[0])) == l2(*fk);
    } catch (const AlgebraError&) {
    }
    if (!ok) {
      v.result.fail(detail::witness(*l1.source, "square", "Γ(Ψ(φ))(λ₁(k)) != λ₂(φ(k))", t[0]));
    }
  });
  return v;
}

enum class StageStatus { kPass, kFail, kSkipped };

[[nodiscard]] const char* status_name(StageStatus s);

using FactValue = std::variant<std::int64_t, double, std::string, bool>;

struct StageReport {
  std::string name;
  StageStatus status = StageStatus::kSkipped;
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::vector<Violation> witnesses;
  std::vector<std::pair<std::string, FactValue>> facts;
};

struct RoundtripReport {
  std::string lattice_id;
  std::size_t lattice_size = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t exhaustive_threshold = 0;
  std::optional<FodaReport> foda;
  std::vector<StageReport> stages;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const StageReport* stage(std::string_view name) const;
};

/// Stage names in pipeline order.
inline constexpr std::array<const char*, 9> kRoundtripStages = {
    "lattice", "monoid", "gamma", "foda", "psi", "mu", "lambda", "functor_laws", "naturality"};

/// Sample budget for each per-automorphism check: the global sample count
/// split across the group, with a floor.
inline constexpr std::uint64_t kMinSamplesPerMorphism = 500;

/// Runs every stage in order; a failed stage skips the rest.
[[nodiscard]] RoundtripReport roundtrip(const LatticePtr& lattice, std::string lattice_id,
                                        const Budget& budget = {});

}  // namespace orthodyn

#endif  // ORTHODYN_EQUIVALENCE_HPP_
