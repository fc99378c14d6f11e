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

// Generic finite dynamic algebras (K, ⊔, ⊙, ∼, *, e): the derived
// constructs K̃, ⋁, ⋀, ⪯, ⟨K̃⟩, quotation and ≡, the normal-form
// decomposition, and the quotation homomorphism law.
//
// Any type modelling DynamicAlgebra works here: explicit operation tables,
// the virtual powerset carrier built from a Sasaki monoid, or a test-only
// wrapper that overrides one operation.

#ifndef ORTHODYN_DYNAMIC_ALGEBRA_HPP_
#define ORTHODYN_DYNAMIC_ALGEBRA_HPP_

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthodyn/check.hpp"
#include "orthodyn/lattice.hpp"
#include "orthodyn/sampling.hpp"

namespace orthodyn {

class AlgebraError : public Error {
 public:
  using Error::Error;
};

template <class A>
concept DynamicAlgebra =
    std::totally_ordered<typename A::Element> &&
    requires(const A& a, const typename A::Element& x, SampleRng& rng,
             std::uint64_t i, std::string_view text) {
      { a.zero() } -> std::convertible_to<typename A::Element>;
      { a.top() } -> std::convertible_to<typename A::Element>;
      { a.unit() } -> std::convertible_to<typename A::Element>;
      { a.join(x, x) } -> std::convertible_to<typename A::Element>;
      { a.mul(x, x) } -> std::convertible_to<typename A::Element>;
      { a.neg(x) } -> std::convertible_to<typename A::Element>;
      { a.star(x) } -> std::convertible_to<typename A::Element>;
      // Number of carrier elements, or nullopt when it does not fit 63 bits.
      { a.carrier_size() } -> std::same_as<std::optional<std::uint64_t>>;
      { a.carrier_log2() } -> std::convertible_to<double>;
      // i-th carrier element, i < carrier_size(). Distinct i, distinct elements.
      { a.element_at(i) } -> std::convertible_to<typename A::Element>;
      { a.sample(rng) } -> std::convertible_to<typename A::Element>;
      { a.format(x) } -> std::convertible_to<std::string>;
      { a.parse_element(text) } -> std::convertible_to<typename A::Element>;
    };

/// Algebras whose ∼-image is covered by the image of a small element list.
template <class A>
concept HasNegCover = DynamicAlgebra<A> && requires(const A& a) {
  { a.neg_cover() } -> std::convertible_to<std::vector<typename A::Element>>;
};

/// Largest carrier tilde_set will enumerate when no cover is available.
inline constexpr std::uint64_t kTildeEnumerationLimit = std::uint64_t{1} << 24;
/// Caps for ⟨K̃⟩ and for the (⊙, *)-closure used by the minimality check.
inline constexpr std::size_t kSpanCap = std::size_t{1} << 16;

template <DynamicAlgebra K>
using ElementOf = typename K::Element;

/// m-semilattice order: a ⊑ b iff a ⊔ b = b.
template <DynamicAlgebra K>
bool below(const K& alg, const ElementOf<K>& a, const ElementOf<K>& b) {
  return alg.join(a, b) == b;
}

template <DynamicAlgebra K>
ElementOf<K> join_all(const K& alg, std::span<const ElementOf<K>> xs) {
  ElementOf<K> acc = alg.zero();
  for (const auto& x : xs) acc = alg.join(acc, x);
  return acc;
}

/// K̃ in element order, deduplicated.
template <DynamicAlgebra K>
class Tilde {
 public:
  using E = ElementOf<K>;

  Tilde() = default;
  explicit Tilde(std::vector<E> sorted) : elements_(std::move(sorted)) {}

  [[nodiscard]] const std::vector<E>& elements() const noexcept {
    return elements_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] std::optional<std::size_t> index_of(const E& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }
  [[nodiscard]] bool contains(const E& x) const { return index_of(x).has_value(); }

 private:
  std::vector<E> elements_;
};

/// Image of ∼ over the carrier (or over the algebra's neg cover).
template <DynamicAlgebra K>
Tilde<K> tilde_set(const K& alg) {
  std::vector<ElementOf<K>> image;
  if constexpr (HasNegCover<K>) {
    for (const auto& x : alg.neg_cover()) image.push_back(alg.neg(x));
  } else {
    auto n = alg.carrier_size();
    if (!n || *n > kTildeEnumerationLimit) {
      throw AlgebraError("carrier too large to enumerate the image of ∼");
    }
    for (std::uint64_t i = 0; i < *n; ++i) image.push_back(alg.neg(alg.element_at(i)));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return Tilde<K>(std::move(image));
}

/// Image of ∼ over the whole carrier, ignoring any cover. Test oracle for
/// neg covers; only for enumerable carriers.
template <DynamicAlgebra K>
Tilde<K> tilde_set_by_enumeration(const K& alg) {
  auto n = alg.carrier_size();
  if (!n || *n > kTildeEnumerationLimit) {
    throw AlgebraError("carrier too large to enumerate the image of ∼");
  }
  std::vector<ElementOf<K>> image;
  for (std::uint64_t i = 0; i < *n; ++i) image.push_back(alg.neg(alg.element_at(i)));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return Tilde<K>(std::move(image));
}

/// ⋁W = ∼∼(⊔W) for finite W ⊆ K̃.
template <DynamicAlgebra K>
ElementOf<K> derived_join(const K& alg, std::span<const ElementOf<K>> w) {
  return alg.neg(alg.neg(join_all(alg, w)));
}

/// ⋀W = ∼⊔{∼w : w ∈ W} for finite W ⊆ K̃.
template <DynamicAlgebra K>
ElementOf<K> derived_meet(const K& alg, std::span<const ElementOf<K>> w) {
  ElementOf<K> acc = alg.zero();
  for (const auto& x : w) acc = alg.join(acc, alg.neg(x));
  return alg.neg(acc);
}

/// k ⪯ l iff ⋁{k, l} = l. Both arguments must lie in K̃.
template <DynamicAlgebra K>
bool derived_order(const K& alg, const Tilde<K>& tilde, const ElementOf<K>& k,
                   const ElementOf<K>& l) {
  if (!tilde.contains(k) || !tilde.contains(l)) {
    throw AlgebraError("derived order is only defined on K̃");
  }
  return alg.neg(alg.neg(alg.join(k, l))) == l;
}

/// ⌜k⌝(l) = ∼∼(k ⊙ l)
template <DynamicAlgebra K>
ElementOf<K> quote(const K& alg, const ElementOf<K>& k, const ElementOf<K>& l) {
  return alg.neg(alg.neg(alg.mul(k, l)));
}

/// k ≡ l iff ⌜k⌝(w) = ⌜l⌝(w) for every w ∈ K̃.
template <DynamicAlgebra K>
bool equiv(const K& alg, const Tilde<K>& tilde, const ElementOf<K>& k,
           const ElementOf<K>& l) {
  for (const auto& w : tilde.elements()) {
    if (!(quote(alg, k, w) == quote(alg, l, w))) return false;
  }
  return true;
}

/// ⟨K̃⟩: all finite ⊙-products of K̃ elements, each with one shortest
/// product word (indices into K̃).
template <DynamicAlgebra K>
struct TildeSpan {
  std::vector<ElementOf<K>> elements;  // sorted
  std::vector<std::vector<std::size_t>> words;

  [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
  [[nodiscard]] std::optional<std::size_t> index_of(const ElementOf<K>& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

template <DynamicAlgebra K>
TildeSpan<K> tilde_span(const K& alg, const Tilde<K>& tilde) {
  using E = ElementOf<K>;
  std::map<E, std::vector<std::size_t>> found;
  std::vector<E> frontier;
  for (std::size_t i = 0; i < tilde.size(); ++i) {
    if (found.try_emplace(tilde.elements()[i], std::vector<std::size_t>{i}).second) {
      frontier.push_back(tilde.elements()[i]);
    }
  }
  while (!frontier.empty()) {
    std::vector<E> next;
    for (const auto& x : frontier) {
      const auto word = found.at(x);
      for (std::size_t i = 0; i < tilde.size(); ++i) {
        E y = alg.mul(x, tilde.elements()[i]);
        if (found.contains(y)) continue;
        if (found.size() >= kSpanCap) {
          throw AlgebraError("⟨K̃⟩ exceeds the span cap");
        }
        auto w = word;
        w.push_back(i);
        found.emplace(y, std::move(w));
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  TildeSpan<K> out;
  for (auto& [e, w] : found) {
    out.elements.push_back(e);
    out.words.push_back(w);
  }
  return out;
}

/// Product w_1 ⊙ ... ⊙ w_n of K̃ elements given by index.
template <DynamicAlgebra K>
ElementOf<K> product(const K& alg, const Tilde<K>& tilde,
                     std::span<const std::size_t> word) {
  ElementOf<K> acc = alg.unit();
  for (std::size_t i : word) acc = alg.mul(acc, tilde.elements()[i]);
  return acc;
}

/// The unique S ⊆ ⟨K̃⟩ with ⊔S = k: every ⟨K̃⟩ element below k.
/// Throws AlgebraError when their join is not k.
template <DynamicAlgebra K>
std::vector<ElementOf<K>> decompose(const K& alg, const TildeSpan<K>& span,
                                    const ElementOf<K>& k) {
  std::vector<ElementOf<K>> parts;
  for (const auto& s : span.elements) {
    if (below(alg, s, k)) parts.push_back(s);
  }
  if (!(join_all<K>(alg, parts) == k)) {
    throw AlgebraError("no decomposition into ⟨K̃⟩ elements exists for " +
                       alg.format(k));
  }
  return parts;
}

/// Result of a budgeted check: verdict plus how it was reached.
struct Verdict {
  CheckResult result;
  bool exhaustive = true;
  std::uint64_t samples = 0;

  [[nodiscard]] bool passed() const noexcept { return result.passed(); }
};

namespace detail {

/// Runs fn(tuple) over all arity-tuples of the carrier when their number is
/// within the threshold, else over `samples` seeded draws.
template <DynamicAlgebra K, std::size_t Arity, class Fn>
void for_each_tuple(const K& alg, const Budget& budget, std::string_view stream,
                    Verdict& verdict, Fn&& fn) {
  using E = ElementOf<K>;
  const auto n = alg.carrier_size();
  std::array<E, Arity> tup{};
  if (n && tuple_count(*n, Arity) <= budget.exhaustive_threshold) {
    const std::uint64_t total = tuple_count(*n, Arity);
    for (std::uint64_t t = 0; t < total; ++t) {
      std::uint64_t rest = t;
      for (std::size_t j = 0; j < Arity; ++j) {
        tup[j] = alg.element_at(rest % *n);
        rest /= *n;
      }
      fn(tup);
    }
    return;
  }
  verdict.exhaustive = false;
  verdict.samples = std::max(verdict.samples, budget.samples);
  const auto id = stream_id(stream);
  for (std::uint64_t i = 0; i < budget.samples; ++i) {
    SampleRng rng(budget.seed, id, i);
    for (std::size_t j = 0; j < Arity; ++j) tup[j] = alg.sample(rng);
    fn(tup);
  }
}

template <DynamicAlgebra K, class... Es>
Violation witness(const K& alg, std::string clause, std::string detail,
                  const Es&... xs) {
  Violation v{std::move(clause), {}, {}, std::move(detail)};
  (v.elements.push_back(alg.format(xs)), ...);
  return v;
}

}  // namespace detail

/// ⌜w_1 ⊙ ... ⊙ w_n⌝(k) = ⌜w_1⌝(... ⌜w_n⌝(k) ...) for all words over K̃ up
/// to max_word_len; on K̃ arguments also equals the composite of Sasaki
/// projections computed in `lattice` (K̃ with ⪯ and ∼, indexed like
/// `tilde`). Clauses "homomorphism", "sasaki_composite".
template <DynamicAlgebra K>
Verdict check_quote_homomorphism(const K& alg, const Tilde<K>& tilde,
                                 const OrthoLattice& lattice,
                                 std::size_t max_word_len, const Budget& budget) {
  using E = ElementOf<K>;
  Verdict verdict;
  const std::size_t t = tilde.size();
  std::uint64_t words = 0;
  for (std::size_t len = 1, c = t; len <= max_word_len; ++len, c *= t) words += c;
  const std::uint64_t extra =
      std::max<std::uint64_t>(8, words ? budget.samples / words : 0);
  const auto n = alg.carrier_size();
  const bool carrier_exhaustive =
      n && words > 0 && *n <= budget.exhaustive_threshold / words;
  verdict.exhaustive = carrier_exhaustive;
  const auto id = stream_id("quote_homomorphism");
  std::uint64_t counter = 0;

  std::vector<std::size_t> word;
  for (std::size_t len = 1; len <= max_word_len; ++len) {
    word.assign(len, 0);
    while (true) {
      const E prod = product(alg, tilde, word);
      auto nested = [&](E k) {
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          k = quote(alg, tilde.elements()[*it], k);
        }
        return k;
      };
      auto fmt_word = [&] {
        std::string s;
        for (std::size_t i : word) s += (s.empty() ? "" : "⊙") + alg.format(tilde.elements()[i]);
        return s;
      };
      for (std::size_t a = 0; a < t; ++a) {
        const E& k = tilde.elements()[a];
        const E lhs = quote(alg, prod, k);
        if (!(lhs == nested(k))) {
          verdict.result.fail(detail::witness(alg, "homomorphism", "word " + fmt_word(), prod, k));
        }
        Elem x = static_cast<Elem>(a);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          x = lattice.project(static_cast<Elem>(*it), x);
        }
        if (!(lhs == tilde.elements()[x])) {
          verdict.result.fail(detail::witness(alg, "sasaki_composite", "word " + fmt_word(), prod, k));
        }
      }
      auto check_arg = [&](const E& k) {
        if (!(quote(alg, prod, k) == nested(k))) {
          verdict.result.fail(detail::witness(alg, "homomorphism", "word " + fmt_word(), prod, k));
        }
      };
      if (carrier_exhaustive) {
        for (std::uint64_t i = 0; i < *n; ++i) check_arg(alg.element_at(i));
      } else {
        for (std::uint64_t s = 0; s < extra; ++s) {
          SampleRng rng(budget.seed, id, counter++);
          check_arg(alg.sample(rng));
        }
        verdict.samples = counter;
      }
      std::size_t pos = len;
      while (pos > 0 && word[pos - 1] + 1 == t) word[--pos] = 0;
      if (pos == 0) break;
      ++word[pos - 1];
    }
  }
  return verdict;
}

}  // namespace orthodyn

#endif  // ORTHODYN_DYNAMIC_ALGEBRA_HPP_
