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

// The FODA 1-7 axiom checker and the FODA-morphism checker.

#ifndef ORTHODYN_FODA_HPP_
#define ORTHODYN_FODA_HPP_

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orthodyn/dynamic_algebra.hpp"
#include "orthodyn/lattice.hpp"

namespace orthodyn {

/// Largest K̃ materialized as a lattice.
inline constexpr std::size_t kTildeLatticeCap = 512;
/// Carriers up to this size get the full closure when the fast minimality
/// test fails.
inline constexpr std::uint64_t kClosureMaterializeLimit = 4096;
/// Cap on the (⊙, *)-closure of K̃ ∪ {0} built by the minimality check.
inline constexpr std::size_t kGeneratedCap = std::size_t{1} << 13;

/// (K̃, ⪯, ∼) as an OrthoLattice whose element i is tilde.elements()[i].
/// Meets and joins come from ⪯ alone; `lattice` is null when ⪯ is not a
/// bounded lattice order or ∼ does not permute K̃, and `problems` says why.
template <DynamicAlgebra K>
struct TildeLattice {
  Tilde<K> tilde;
  LatticePtr lattice;
  CheckResult problems;
};

template <DynamicAlgebra K>
TildeLattice<K> build_tilde_lattice(const K& alg, Tilde<K> tilde) {
  TildeLattice<K> out{std::move(tilde), nullptr, {}};
  const auto& el = out.tilde.elements();
  const std::size_t n = el.size();
  if (n > kTildeLatticeCap) {
    out.problems.fail({"size", {static_cast<std::int64_t>(n)}, {}, "K̃ too large to materialize"});
    return out;
  }
  std::vector<bool> leq(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = derived_order(alg, out.tilde, el[i], el[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i * n + i]) {
      out.problems.fail(detail::witness(alg, "preorder", "⪯ is not reflexive", el[i]));
      return out;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i * n + j] && leq[j * n + k] && !leq[i * n + k]) {
          out.problems.fail(detail::witness(alg, "preorder", "⪯ is not transitive", el[i], el[j], el[k]));
          return out;
        }
  std::vector<Elem> ortho(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto idx = out.tilde.index_of(alg.neg(el[i]));
    if (!idx) {
      out.problems.fail(detail::witness(alg, "neg_closed", "∼k leaves K̃", el[i]));
      return out;
    }
    ortho[i] = static_cast<Elem>(*idx);
  }
  std::vector<std::string> names;
  for (const auto& e : el) names.push_back(alg.format(e));
  try {
    out.lattice = share(OrthoLattice::from_matrix(n, std::move(leq), std::move(ortho),
                                                  std::move(names), OrthoLaws::kSkip));
  } catch (const LatticeError& e) {
    Violation v{"lattice", {}, {}, e.what()};
    auto [a, b] = e.witness();
    if (a >= 0 && static_cast<std::size_t>(a) < n) v.elements.push_back(alg.format(el[a]));
    if (b >= 0 && static_cast<std::size_t>(b) < n) v.elements.push_back(alg.format(el[b]));
    out.problems.fail(std::move(v));
  }
  return out;
}

template <DynamicAlgebra K>
TildeLattice<K> build_tilde_lattice(const K& alg) {
  return build_tilde_lattice(alg, tilde_set(alg));
}

enum class AxiomStatus { kPass, kFail, kSampledPass };

[[nodiscard]] inline const char* status_name(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::kPass: return "pass";
    case AxiomStatus::kFail: return "fail";
    case AxiomStatus::kSampledPass: return "sampled-pass";
  }
  return "?";
}

struct AxiomReport {
  std::string id;  // "FODA1" ... "FODA7"
  Verdict verdict;
  std::string note;

  [[nodiscard]] AxiomStatus status() const {
    if (!verdict.passed()) return AxiomStatus::kFail;
    return verdict.exhaustive ? AxiomStatus::kPass : AxiomStatus::kSampledPass;
  }
};

struct FodaReport {
  std::array<AxiomReport, 7> axioms;
  std::uint64_t seed = 0;

  [[nodiscard]] bool passed() const {
    return std::all_of(axioms.begin(), axioms.end(),
                       [](const AxiomReport& a) { return a.verdict.passed(); });
  }
  [[nodiscard]] const AxiomReport& axiom(int number) const { return axioms.at(number - 1); }
};

namespace detail {

template <DynamicAlgebra K>
void check_foda1(const K& alg, const Budget& budget, Verdict& v) {
  using E = ElementOf<K>;
  auto fail = [&](const char* law, const char* what, const auto&... xs) {
    v.result.fail(witness(alg, law, what, xs...));
  };
  const E zero = alg.zero();
  const E top = alg.top();
  const E unit = alg.unit();
  if (!(alg.star(zero) == zero)) fail("star_zero", "0* != 0", zero);

  for_each_tuple<K, 1>(alg, budget, "foda1.unary", v, [&](const std::array<E, 1>& t) {
    const E& k = t[0];
    if (!(alg.join(k, k) == k)) fail("join_idempotent", "k ⊔ k != k", k);
    if (!(alg.join(zero, k) == k)) fail("zero_neutral", "0 ⊔ k != k", k);
    if (!(alg.join(k, top) == top)) fail("top_greatest", "k ⊔ 1 != 1", k);
    if (!(alg.mul(k, zero) == zero) || !(alg.mul(zero, k) == zero)) {
      fail("mul_zero", "k ⊙ 0 or 0 ⊙ k is not 0", k);
    }
    if (!(alg.mul(unit, k) == k) || !(alg.mul(k, unit) == k)) fail("unit", "e ⊙ k = k = k ⊙ e fails", k);
    if (!(alg.star(alg.star(k)) == k)) fail("star_involution", "k** != k", k);
  });
  for_each_tuple<K, 2>(alg, budget, "foda1.binary", v, [&](const std::array<E, 2>& t) {
    const E& k = t[0];
    const E& l = t[1];
    if (!(alg.join(k, l) == alg.join(l, k))) fail("join_commutative", "k ⊔ l != l ⊔ k", k, l);
    if (!(alg.star(alg.mul(k, l)) == alg.mul(alg.star(l), alg.star(k)))) {
      fail("star_antihom", "(k ⊙ l)* != l* ⊙ k*", k, l);
    }
    if (!(alg.star(alg.join(k, l)) == alg.join(alg.star(k), alg.star(l)))) {
      fail("star_join", "(k ⊔ l)* != k* ⊔ l*", k, l);
    }
  });
  for_each_tuple<K, 3>(alg, budget, "foda1.ternary", v, [&](const std::array<E, 3>& t) {
    const E& a = t[0];
    const E& b = t[1];
    const E& c = t[2];
    if (!(alg.join(alg.join(a, b), c) == alg.join(a, alg.join(b, c)))) {
      fail("join_associative", "(a ⊔ b) ⊔ c != a ⊔ (b ⊔ c)", a, b, c);
    }
    if (!(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)))) {
      fail("mul_associative", "(a ⊙ b) ⊙ c != a ⊙ (b ⊙ c)", a, b, c);
    }
    if (!(alg.mul(a, alg.join(b, c)) == alg.join(alg.mul(a, b), alg.mul(a, c)))) {
      fail("mul_left_distributive", "a ⊙ (b ⊔ c) != (a ⊙ b) ⊔ (a ⊙ c)", a, b, c);
    }
    if (!(alg.mul(alg.join(b, c), a) == alg.join(alg.mul(b, a), alg.mul(c, a)))) {
      fail("mul_right_distributive", "(b ⊔ c) ⊙ a != (b ⊙ a) ⊔ (c ⊙ a)", a, b, c);
    }
  });
}

template <DynamicAlgebra K>
void check_foda2(const K& alg, const TildeLattice<K>& tl, Verdict& v) {
  v.result.merge(tl.problems);
  const auto& el = tl.tilde.elements();
  for (const auto& x : el) {
    if (!tl.tilde.contains(alg.star(x))) {
      v.result.fail(witness(alg, "star_closed", "k ∈ K̃ but k* ∉ K̃", x));
      break;
    }
  }
  if (!tl.lattice) return;
  const OrthoLattice& L = *tl.lattice;
  auto relabel = [&](const CheckResult& r) {
    for (auto viol : r.violations()) {
      for (auto i : viol.indices) viol.elements.push_back(alg.format(el[i]));
      viol.indices.clear();
      v.result.fail(std::move(viol));
    }
  };
  relabel(check_ortholattice(L));
  relabel(check_orthomodular(L));
  // Cross-check the displayed ⋁/⋀ formulas against the brute-force tables.
  const std::vector<ElementOf<K>> none;
  if (!(derived_join<K>(alg, none) == el[L.bottom()])) {
    v.result.fail(witness(alg, "derived_join", "⋁∅ is not the least element of K̃", derived_join<K>(alg, none)));
  }
  if (!(derived_meet<K>(alg, none) == el[L.top()])) {
    v.result.fail(witness(alg, "derived_meet", "⋀∅ is not the greatest element of K̃", derived_meet<K>(alg, none)));
  }
  for (Elem i = 0; i < L.size(); ++i) {
    for (Elem j = 0; j < L.size(); ++j) {
      const std::array<ElementOf<K>, 2> pair{el[i], el[j]};
      if (!(derived_join<K>(alg, pair) == el[L.join(i, j)])) {
        v.result.fail(witness(alg, "derived_join", "⋁{k,l} differs from the least upper bound under ⪯", el[i], el[j]));
      }
      if (!(derived_meet<K>(alg, pair) == el[L.meet(i, j)])) {
        v.result.fail(witness(alg, "derived_meet", "⋀{k,l} differs from the greatest lower bound under ⪯", el[i], el[j]));
      }
    }
  }
}

/// FODA 3. With G the (⊙, *)-closure of K̃ ∪ {0}, the join-closure J of G
/// lies inside the minimal closed set, so the axiom holds once every k
/// equals ⊔{g ∈ G : g ⊑ k}. If that fails on a small carrier the true
/// closure is materialized before reporting.
template <DynamicAlgebra K>
void check_foda3(const K& alg, const Tilde<K>& tilde, const Budget& budget, Verdict& v,
                 std::string& note) {
  using E = ElementOf<K>;
  std::set<E> closure(tilde.elements().begin(), tilde.elements().end());
  closure.insert(alg.zero());
  std::vector<E> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<E> next;
    bool overflow = false;
    auto add = [&](E x) {
      if (overflow) return;
      if (closure.insert(x).second) next.push_back(std::move(x));
      overflow = closure.size() > kGeneratedCap;
    };
    const std::vector<E> snapshot(closure.begin(), closure.end());
    for (const auto& a : frontier) {
      if (overflow) break;
      add(alg.star(a));
      for (const auto& b : snapshot) {
        if (overflow) break;
        add(alg.mul(a, b));
        add(alg.mul(b, a));
      }
    }
    if (overflow) {
      v.result.fail({"closure_size", {}, {}, "(⊙, *)-closure of K̃ exceeds the cap"});
      return;
    }
    frontier = std::move(next);
  }
  const std::vector<E> gens(closure.begin(), closure.end());
  note = std::to_string(gens.size()) + " (⊙,*)-generated elements";

  std::optional<E> missing;
  for_each_tuple<K, 1>(alg, budget, "foda3", v, [&](const std::array<E, 1>& t) {
    if (missing) return;
    E acc = alg.zero();
    for (const auto& g : gens) {
      if (below(alg, g, t[0])) acc = alg.join(acc, g);
    }
    if (!(acc == t[0])) missing = t[0];
  });
  if (!missing) return;

  const auto n = alg.carrier_size();
  if (n && *n <= kClosureMaterializeLimit) {
    std::set<E> full(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<E> cur(full.begin(), full.end());
      for (const auto& a : cur) {
        grew |= full.insert(alg.star(a)).second;
        for (const auto& b : cur) {
          grew |= full.insert(alg.mul(a, b)).second;
          grew |= full.insert(alg.join(a, b)).second;
        }
      }
    }
    for (std::uint64_t i = 0; i < *n; ++i) {
      const E k = alg.element_at(i);
      if (!full.contains(k)) {
        v.result.fail(witness(alg, "minimality", "k is outside the closure of K̃ under ⊙, *, ⊔", k));
        return;
      }
    }
    note += "; full closure materialized";
    return;
  }
  v.result.fail(witness(alg, "minimality", "k is not a join of (⊙,*)-products of K̃ elements", *missing));
}

template <DynamicAlgebra K>
void check_foda4(const K& alg, const TildeSpan<K>& span, const Budget& budget, Verdict& v) {
  using E = ElementOf<K>;
  const std::size_t s = span.size();
  auto join_of = [&](const std::vector<bool>& mask) {
    E acc = alg.zero();
    for (std::size_t i = 0; i < s; ++i)
      if (mask[i]) acc = alg.join(acc, span.elements[i]);
    return acc;
  };
  auto report = [&](const std::vector<bool>& a, const std::vector<bool>& b) {
    Violation viol{"join_injective", {}, {}, "distinct S, T ⊆ ⟨K̃⟩ with ⊔S = ⊔T"};
    std::string sa = "S={", sb = "T={";
    for (std::size_t i = 0; i < s; ++i) {
      if (a[i]) sa += (sa.size() > 3 ? "," : "") + alg.format(span.elements[i]);
      if (b[i]) sb += (sb.size() > 3 ? "," : "") + alg.format(span.elements[i]);
    }
    viol.elements = {sa + "}", sb + "}", alg.format(join_of(a))};
    v.result.fail(std::move(viol));
  };
  // Pairs (S, T) number 4^|⟨K̃⟩|; the exhaustive mode compares every pair
  // through a join -> subset table.
  if (2 * s < 64 && (std::uint64_t{1} << (2 * s)) <= budget.exhaustive_threshold) {
    std::map<E, std::uint64_t> seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s); ++bits) {
      std::vector<bool> mask(s);
      for (std::size_t i = 0; i < s; ++i) mask[i] = (bits >> i) & 1;
      auto [it, fresh] = seen.try_emplace(join_of(mask), bits);
      if (!fresh) {
        std::vector<bool> other(s);
        for (std::size_t i = 0; i < s; ++i) other[i] = (it->second >> i) & 1;
        report(other, mask);
        return;
      }
    }
    return;
  }
  v.exhaustive = false;
  v.samples = std::max(v.samples, budget.samples);
  const auto id = stream_id("foda4");
  for (std::uint64_t i = 0; i < budget.samples; ++i) {
    SampleRng rng(budget.seed, id, i);
    std::vector<bool> a(s);
    for (std::size_t j = 0; j < s; ++j) a[j] = rng() & 1;
    std::vector<bool> b = a;
    // Mostly near-equal pairs: toggle one or two members.
    if (rng.below(10) < 7 && s > 0) {
      const std::size_t flips = 1 + rng.below(2);
      for (std::size_t f = 0; f < flips; ++f) b[rng.below(s)].flip();
    } else {
      for (std::size_t j = 0; j < s; ++j) b[j] = rng() & 1;
    }
    if (a == b) continue;
    if (join_of(a) == join_of(b)) {
      report(a, b);
      return;
    }
  }
}

inline const std::array<const char*, 7> kFodaNotes = {
    "unital involutive m-semilattice",
    "(K̃, ⪯, ∼) is an orthomodular lattice closed under *",
    "minimality of the carrier",
    "⊔ is injective on subsets of ⟨K̃⟩",
    "≡ is equality on ⟨K̃⟩",
    "⌜v⌝(w) is the Sasaki projection on K̃",
    "⌜k⌝(l) = ⌜k⌝(∼∼l)",
};

}  // namespace detail

/// Evaluates FODA 1-7. Failures are report content, never exceptions.
template <DynamicAlgebra K>
FodaReport check_foda(const K& alg, const Budget& budget = {}) {
  using E = ElementOf<K>;
  FodaReport report;
  report.seed = budget.seed;
  for (int i = 0; i < 7; ++i) {
    report.axioms[i].id = "FODA" + std::to_string(i + 1);
    report.axioms[i].note = detail::kFodaNotes[i];
  }

  detail::check_foda1(alg, budget, report.axioms[0].verdict);

  const TildeLattice<K> tl = build_tilde_lattice(alg);
  const Tilde<K>& tilde = tl.tilde;
  detail::check_foda2(alg, tl, report.axioms[1].verdict);

  std::string note3;
  detail::check_foda3(alg, tilde, budget, report.axioms[2].verdict, note3);
  if (!note3.empty()) report.axioms[2].note += " (" + note3 + ")";

  std::optional<TildeSpan<K>> span;
  try {
    span = tilde_span(alg, tilde);
  } catch (const AlgebraError& e) {
    for (int i : {3, 4}) report.axioms[i].verdict.result.fail({"span", {}, {}, e.what()});
  }

  if (span) {
    detail::check_foda4(alg, *span, budget, report.axioms[3].verdict);

    Verdict& v5 = report.axioms[4].verdict;
    for (std::size_t i = 0; i < span->size(); ++i) {
      for (std::size_t j = 0; j < span->size(); ++j) {
        const E& s = span->elements[i];
        const E& t = span->elements[j];
        if ((i == j) != equiv(alg, tilde, s, t)) {
          v5.result.fail(detail::witness(alg, "completeness",
                                         i == j ? "s is not ≡ itself" : "distinct s, t with s ≡ t", s, t));
        }
      }
    }
  }

  Verdict& v6 = report.axioms[5].verdict;
  if (!tl.lattice) {
    v6.result.fail({"sasaki", {}, {}, "(K̃, ⪯, ∼) is not a lattice"});
  } else {
    const OrthoLattice& L = *tl.lattice;
    const auto& el = tilde.elements();
    for (Elem a = 0; a < L.size(); ++a) {
      for (Elem b = 0; b < L.size(); ++b) {
        if (!(quote(alg, el[a], el[b]) == el[L.project(a, b)])) {
          v6.result.fail(detail::witness(alg, "sasaki", "⌜v⌝(w) != v ∧ (∼v ∨ w)", el[a], el[b]));
        }
      }
    }
  }

  Verdict& v7 = report.axioms[6].verdict;
  detail::for_each_tuple<K, 2>(alg, budget, "foda7", v7, [&](const std::array<E, 2>& t) {
    if (!(quote(alg, t[0], t[1]) == quote(alg, t[0], alg.neg(alg.neg(t[1]))))) {
      v7.result.fail(detail::witness(alg, "double_negation", "⌜k⌝(l) != ⌜k⌝(∼∼l)", t[0], t[1]));
    }
  });
  return report;
}

/// A map φ: K₁ -> K₂. The map returns nullopt when an image falls outside
/// the target carrier.
template <DynamicAlgebra Src, DynamicAlgebra Dst>
struct FodaMorphism {
  using Map = std::function<std::optional<ElementOf<Dst>>(const ElementOf<Src>&)>;

  const Src* source = nullptr;
  const Dst* target = nullptr;
  Map map;

  [[nodiscard]] std::optional<ElementOf<Dst>> operator()(const ElementOf<Src>& k) const {
    return map(k);
  }
};

template <DynamicAlgebra K>
FodaMorphism<K, K> identity_morphism(const K& alg) {
  return {&alg, &alg, [](const ElementOf<K>& k) { return std::optional<ElementOf<K>>(k); }};
}

/// `second ∘ first`.
template <DynamicAlgebra A, DynamicAlgebra B, DynamicAlgebra C>
FodaMorphism<A, C> compose(const FodaMorphism<B, C>& second, const FodaMorphism<A, B>& first) {
  return {first.source, second.target,
          [second, first](const ElementOf<A>& k) -> std::optional<ElementOf<C>> {
            auto mid = first(k);
            if (!mid) return std::nullopt;
            return second(*mid);
          }};
}

/// The restriction of φ to K̃₁ -> K̃₂ as an OrthoMorphism between the two
/// tilde lattices; nullopt when φ(K̃₁) ⊄ K̃₂.
template <DynamicAlgebra Src, DynamicAlgebra Dst>
std::optional<OrthoMorphism> restrict_to_tilde(const FodaMorphism<Src, Dst>& phi,
                                               const TildeLattice<Src>& from,
                                               const TildeLattice<Dst>& to) {
  std::vector<Elem> map;
  for (const auto& k : from.tilde.elements()) {
    auto img = phi(k);
    if (!img) return std::nullopt;
    auto idx = to.tilde.index_of(*img);
    if (!idx) return std::nullopt;
    map.push_back(static_cast<Elem>(*idx));
  }
  return OrthoMorphism{from.lattice, to.lattice, std::move(map)};
}

/// The six FODA-morphism clauses: "tilde" (φ(K̃₁) ⊆ K̃₂ and the
/// restriction is an ortho-lattice isomorphism), "join", "zero", "mul",
/// "neg", "star", "unit"; plus "total" when an image escapes the target.
template <DynamicAlgebra Src, DynamicAlgebra Dst>
Verdict check_foda_morphism(const FodaMorphism<Src, Dst>& phi, const TildeLattice<Src>& from,
                            const TildeLattice<Dst>& to, const Budget& budget = {}) {
  using E = ElementOf<Src>;
  const Src& src = *phi.source;
  const Dst& dst = *phi.target;
  Verdict v;
  auto image = [&](const E& k) -> std::optional<ElementOf<Dst>> {
    auto r = phi(k);
    if (!r) v.result.fail(detail::witness(src, "total", "φ(k) is not a target element", k));
    return r;
  };

  for (const auto& k : from.tilde.elements()) {
    auto img = image(k);
    if (img && !to.tilde.contains(*img)) {
      v.result.fail(detail::witness(src, "tilde", "k ∈ K̃₁ but φ(k) ∉ K̃₂", k));
    }
  }
  if (!v.result.has("tilde") && !v.result.has("total")) {
    if (!from.lattice || !to.lattice) {
      v.result.fail({"tilde", {}, {}, "K̃ of source or target is not a lattice"});
    } else if (auto restricted = restrict_to_tilde(phi, from, to)) {
      for (auto viol : check_ortho_iso(*restricted).violations()) {
        for (auto i : viol.indices) {
          if (i >= 0 && static_cast<std::size_t>(i) < from.tilde.size())
            viol.elements.push_back(src.format(from.tilde.elements()[i]));
        }
        viol.indices.clear();
        viol.clause = "tilde." + viol.clause;
        v.result.fail(std::move(viol));
      }
    }
  }

  if (auto z = image(src.zero()); z && !(*z == dst.zero())) {
    v.result.fail(detail::witness(src, "zero", "φ(0) != 0", src.zero()));
  }
  if (auto e = image(src.unit()); e && !(*e == dst.unit())) {
    v.result.fail(detail::witness(src, "unit", "φ(e₁) != e₂", src.unit()));
  }
  detail::for_each_tuple<Src, 1>(src, budget, "morphism.unary", v, [&](const std::array<E, 1>& t) {
    auto fk = image(t[0]);
    if (!fk) return;
    auto fneg = image(src.neg(t[0]));
    if (fneg && !(*fneg == dst.neg(*fk))) v.result.fail(detail::witness(src, "neg", "φ(∼k) != ∼φ(k)", t[0]));
    auto fstar = image(src.star(t[0]));
    if (fstar && !(*fstar == dst.star(*fk))) v.result.fail(detail::witness(src, "star", "φ(k*) != φ(k)*", t[0]));
  });
  detail::for_each_tuple<Src, 2>(src, budget, "morphism.binary", v, [&](const std::array<E, 2>& t) {
    auto fk = image(t[0]);
    auto fl = image(t[1]);
    if (!fk || !fl) return;
    auto fj = image(src.join(t[0], t[1]));
    if (fj && !(*fj == dst.join(*fk, *fl))) v.result.fail(detail::witness(src, "join", "φ(k ⊔ l) != φ(k) ⊔ φ(l)", t[0], t[1]));
    auto fm = image(src.mul(t[0], t[1]));
    if (fm && !(*fm == dst.mul(*fk, *fl))) v.result.fail(detail::witness(src, "mul", "φ(k ⊙ l) != φ(k) ⊙ φ(l)", t[0], t[1]));
  });
  return v;
}

}  // namespace orthodyn

#endif  // ORTHODYN_FODA_HPP_
