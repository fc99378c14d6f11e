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

#include "orthodyn/sasaki_monoid.hpp"

#include <algorithm>
#include <string>

namespace orthodyn {

namespace {

std::string word_text(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

}  // namespace

SasakiMonoid SasakiMonoid::build(LatticePtr lattice, MonoidOptions options) {
  const OrthoLattice& L = *lattice;
  if (auto om = check_orthomodular(L); !om.passed()) {
    const auto& v = om.violations().front();
    throw MonoidError("lattice is not orthomodular: witness (" +
                      std::to_string(v.indices[0]) + ", " +
                      std::to_string(v.indices[1]) + ")");
  }
  const auto n = static_cast<Elem>(L.size());

  SasakiMonoid S;
  S.lattice_ = lattice;
  S.generator_of_.assign(n, 0);

  std::vector<EndoMap> projections;
  projections.reserve(n);
  for (Elem m = 0; m < n; ++m) projections.push_back(sasaki_projection(L, m));

  // Collisions are recorded as (prefix element, appended generator, reached)
  // and audited once every involution value is known.
  struct Collision {
    MonoidIndex prefix;  // kNone for one-letter words
    Elem letter;
    MonoidIndex reached;
  };
  constexpr MonoidIndex kNone = ~MonoidIndex{0};
  std::vector<Collision> collisions;

  auto insert = [&](EndoMap f, Word word) -> std::optional<MonoidIndex> {
    auto [it, fresh] =
        S.index_.try_emplace(std::move(f), static_cast<MonoidIndex>(S.elements_.size()));
    if (!fresh) return std::nullopt;
    if (S.elements_.size() >= options.size_cap) {
      throw MonoidError("Sasaki monoid exceeds the size cap of " +
                        std::to_string(options.size_cap) + " elements");
    }
    S.elements_.push_back(it->first);
    S.witness_.push_back(std::move(word));
    return it->second;
  };

  std::vector<MonoidIndex> level;
  for (Elem m = 0; m < n; ++m) {
    auto idx = insert(projections[m], Word{m});
    if (idx) {
      level.push_back(*idx);
      S.generator_of_[m] = *idx;
    } else {
      const MonoidIndex known = S.index_.at(projections[m]);
      S.generator_of_[m] = known;
      collisions.push_back({kNone, m, known});
    }
  }

  // Level-by-level: each level is in lexicographic order of witness words,
  // and extending in generator order keeps the next level sorted, so the
  // first word to reach a function is the least one of minimal length.
  while (!level.empty()) {
    std::vector<MonoidIndex> next;
    for (MonoidIndex f : level) {
      for (Elem g = 0; g < n; ++g) {
        EndoMap h = S.elements_[f].after(projections[g]);
        if (auto found = S.index_.find(h); found != S.index_.end()) {
          collisions.push_back({f, g, found->second});
          continue;
        }
        Word w = S.witness_[f];
        w.push_back(g);
        next.push_back(*insert(std::move(h), std::move(w)));
      }
    }
    level = std::move(next);
  }

  auto identity = S.find(EndoMap::identity(n));
  if (!identity) {
    throw MonoidError("identity map missing from the closure");
  }
  S.identity_ = *identity;

  S.star_of_.resize(S.size());
  for (MonoidIndex f = 0; f < S.size(); ++f) {
    Word rev(S.witness_[f].rbegin(), S.witness_[f].rend());
    auto found = S.find(S.evaluate_map(rev));
    if (!found) {
      throw MonoidError("reversed word " + word_text(rev) +
                        " escapes the closure");
    }
    S.star_of_[f] = *found;
  }

  // Audit: a word reaching a known function must reverse to that function's
  // stored involution. Together with the construction of star this covers
  // every word by induction on length.
  for (const auto& c : collisions) {
    Word w = c.prefix == kNone ? Word{} : S.witness_[c.prefix];
    w.push_back(c.letter);
    Word rev(w.rbegin(), w.rend());
    const bool ok = S.evaluate_map(rev) == S.elements_[S.star_of_[c.reached]];
    S.audit_.push_back({w, c.reached, ok});
    if (!ok) {
      throw MonoidError("word reversal is not well defined: " + word_text(w) +
                        " and " + word_text(S.witness_[c.reached]) +
                        " give the same function but their reversals differ");
    }
  }

  if (S.size() <= options.table_limit) {
    const std::size_t k = S.size();
    S.compose_table_.resize(k * k);
    for (MonoidIndex f = 0; f < k; ++f) {
      for (MonoidIndex g = 0; g < k; ++g) {
        auto found = S.find(S.elements_[f].after(S.elements_[g]));
        if (!found) throw MonoidError("closure is not closed under composition");
        S.compose_table_[f * k + g] = *found;
      }
    }
  }
  return S;
}

MonoidIndex SasakiMonoid::compose(MonoidIndex f, MonoidIndex g) const {
  if (f >= size() || g >= size()) {
    throw InputError("compose: monoid index out of range");
  }
  if (!compose_table_.empty()) return compose_table_[f * size() + g];
  auto found = find(elements_[f].after(elements_[g]));
  if (!found) throw MonoidError("closure is not closed under composition");
  return *found;
}

std::optional<MonoidIndex> SasakiMonoid::find(const EndoMap& f) const {
  if (auto it = index_.find(f); it != index_.end()) return it->second;
  return std::nullopt;
}

MonoidIndex SasakiMonoid::evaluate(const Word& word) const {
  MonoidIndex acc = identity_;
  for (Elem m : word) acc = compose(acc, generator(m));
  return acc;
}

EndoMap SasakiMonoid::evaluate_map(const Word& word) const {
  const OrthoLattice& L = *lattice_;
  std::vector<Elem> v(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    Elem y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = L.project(*it, y);
    v[x] = y;
  }
  return EndoMap(std::move(v));
}

std::map<std::size_t, std::size_t> SasakiMonoid::word_length_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (const auto& w : witness_) ++h[w.size()];
  return h;
}

CheckResult check_involutive_monoid(const SasakiMonoid& S, const Budget& budget) {
  CheckResult result;
  const auto k = static_cast<MonoidIndex>(S.size());
  auto fmt = [](MonoidIndex i) { return static_cast<std::int64_t>(i); };

  for (MonoidIndex f = 0; f < k; ++f) {
    if (S.evaluate_map(S.witness_word(f)) != S.element(f)) {
      result.fail({"witness", {fmt(f)}, {}, "witness word does not evaluate to the element"});
    }
    if (S.compose(S.identity(), f) != f || S.compose(f, S.identity()) != f) {
      result.fail({"identity", {fmt(f)}, {}, "id ∘ f = f = f ∘ id fails"});
    }
    if (S.star(S.star(f)) != f) {
      result.fail({"star_involution", {fmt(f)}, {}, "f** != f"});
    }
    for (MonoidIndex g = 0; g < k; ++g) {
      const MonoidIndex fg = S.compose(f, g);
      if (S.element(fg) != S.element(f).after(S.element(g))) {
        result.fail({"closure", {fmt(f), fmt(g)}, {}, "compose disagrees with pointwise composition"});
      }
      if (S.star(fg) != S.compose(S.star(g), S.star(f))) {
        result.fail({"star_antihom", {fmt(f), fmt(g)}, {}, "(f ∘ g)* != g* ∘ f*"});
      }
    }
  }
  for (Elem m = 0; m < S.lattice()->size(); ++m) {
    if (S.star(S.generator(m)) != S.generator(m)) {
      result.fail({"star_generator", {m}, {}, "π_m* != π_m"});
    }
  }

  // Associativity is checked on functions, independently of the table.
  auto assoc = [&](MonoidIndex f, MonoidIndex g, MonoidIndex h) {
    const EndoMap lhs = S.element(S.compose(S.compose(f, g), h));
    const EndoMap rhs = S.element(f).after(S.element(g)).after(S.element(h));
    if (lhs != rhs || S.compose(f, S.compose(g, h)) != S.compose(S.compose(f, g), h)) {
      result.fail({"associative", {fmt(f), fmt(g), fmt(h)}, {}, "(f ∘ g) ∘ h != f ∘ (g ∘ h)"});
    }
  };
  if (tuple_count(k, 3) <= budget.exhaustive_threshold) {
    for (MonoidIndex f = 0; f < k; ++f)
      for (MonoidIndex g = 0; g < k; ++g)
        for (MonoidIndex h = 0; h < k; ++h) assoc(f, g, h);
  } else {
    const auto stream = stream_id("monoid.associative");
    for (std::uint64_t i = 0; i < budget.samples; ++i) {
      SampleRng rng(budget.seed, stream, i);
      const auto f = static_cast<MonoidIndex>(rng.below(k));
      const auto g = static_cast<MonoidIndex>(rng.below(k));
      const auto h = static_cast<MonoidIndex>(rng.below(k));
      assoc(f, g, h);
    }
  }
  return result;
}

CheckResult check_star_adjointness(const SasakiMonoid& S) {
  CheckResult result;
  const OrthoLattice& L = *S.lattice();
  const auto n = static_cast<Elem>(L.size());
  for (MonoidIndex f = 0; f < S.size(); ++f) {
    const EndoMap& fm = S.element(f);
    const EndoMap& sm = S.element(S.star(f));
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const bool lhs = L.leq(fm(x), L.ortho(y));
        const bool rhs = L.leq(x, L.ortho(sm(y)));
        if (lhs != rhs) {
          result.fail({"orthogonality_adjoint",
                       {static_cast<std::int64_t>(f), x, y},
                       {},
                       "f(x) ⊥ y does not match x ⊥ f*(y)"});
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace orthodyn
