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

#include "orthodyn/gamma.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace orthodyn {

DynSet DynSet::from_members(std::size_t universe, std::span<const MonoidIndex> members) {
  DynSet s(universe);
  for (MonoidIndex i : members) {
    if (i >= universe) throw InputError("monoid index " + std::to_string(i) + " out of range");
    s.insert(i);
  }
  return s;
}

DynSet DynSet::from_mask(std::size_t universe, std::uint64_t mask) {
  DynSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

DynSet DynSet::full(std::size_t universe) {
  DynSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    const std::size_t bits = std::min<std::size_t>(64, universe - w * 64);
    s.words_[w] = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  }
  return s;
}

std::size_t DynSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool DynSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<MonoidIndex> DynSet::members() const {
  std::vector<MonoidIndex> out;
  for_each([&](MonoidIndex i) { out.push_back(i); });
  return out;
}

DynSet& DynSet::operator|=(const DynSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

GammaAlgebra::GammaAlgebra(MonoidPtr monoid) : monoid_(std::move(monoid)) {}

GammaAlgebra GammaAlgebra::build(LatticePtr lattice, MonoidOptions options) {
  return GammaAlgebra(
      std::make_shared<const SasakiMonoid>(SasakiMonoid::build(std::move(lattice), options)));
}

DynSet GammaAlgebra::join(const DynSet& a, const DynSet& b) const {
  DynSet out = a;
  out |= b;
  return out;
}

DynSet GammaAlgebra::mul(const DynSet& a, const DynSet& b) const {
  DynSet out(universe());
  const auto bs = b.members();
  a.for_each([&](MonoidIndex f) {
    for (MonoidIndex g : bs) out.insert(monoid_->compose(f, g));
  });
  return out;
}

Elem GammaAlgebra::top_join(const DynSet& a) const {
  const OrthoLattice& L = lattice();
  Elem acc = L.bottom();
  a.for_each([&](MonoidIndex f) { acc = L.join(acc, monoid_->element(f)(L.top())); });
  return acc;
}

DynSet GammaAlgebra::neg(const DynSet& a) const {
  return projection(lattice().ortho(top_join(a)));
}

DynSet GammaAlgebra::star(const DynSet& a) const {
  DynSet out(universe());
  a.for_each([&](MonoidIndex f) { out.insert(monoid_->star(f)); });
  return out;
}

std::optional<std::uint64_t> GammaAlgebra::carrier_size() const {
  if (universe() > 62) return std::nullopt;
  return std::uint64_t{1} << universe();
}

DynSet GammaAlgebra::element_at(std::uint64_t i) const {
  if (universe() > 62) throw AlgebraError("carrier is not indexable above 62 monoid elements");
  return DynSet::from_mask(universe(), i);
}

DynSet GammaAlgebra::sample(SampleRng& rng) const {
  const std::size_t n = universe();
  const std::size_t small = std::min<std::size_t>(3, n);
  const std::size_t count = (rng() & 1) ? rng.below(small + 1) : rng.below(n + 1);
  std::vector<MonoidIndex> pool(n);
  std::iota(pool.begin(), pool.end(), MonoidIndex{0});
  DynSet out(n);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(pool[i], pool[j]);
    out.insert(pool[i]);
  }
  return out;
}

std::string GammaAlgebra::format(const DynSet& a) const {
  std::string s = "{";
  bool first = true;
  a.for_each([&](MonoidIndex f) {
    if (!first) s += ",";
    s += std::to_string(f);
    first = false;
  });
  return s + "}";
}

DynSet GammaAlgebra::parse_element(std::string_view text) const {
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw InputError("expected a set such as {0,3}: " + std::string(text));
  }
  text = trim(text.substr(1, text.size() - 2));
  DynSet out(universe());
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || value >= universe()) {
      throw InputError("bad monoid index: " + std::string(item));
    }
    out.insert(static_cast<MonoidIndex>(value));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

std::vector<DynSet> GammaAlgebra::neg_cover() const {
  std::vector<DynSet> out{zero()};
  for (Elem m = 0; m < lattice().size(); ++m) out.push_back(projection(m));
  return out;
}

DynSet GammaAlgebra::singleton(MonoidIndex f) const {
  DynSet s(universe());
  s.insert(f);
  return s;
}

DynSet GammaMorphism::operator()(const DynSet& a) const {
  DynSet out(target->universe());
  a.for_each([&](MonoidIndex f) { out.insert(sigma[f]); });
  return out;
}

FodaMorphism<GammaAlgebra, GammaAlgebra> GammaMorphism::as_foda() const {
  return {source, target, [self = *this](const DynSet& a) { return std::optional<DynSet>(self(a)); }};
}

GammaMorphism gamma_arrow(const OrthoMorphism& k, const GammaAlgebra& source,
                          const GammaAlgebra& target) {
  const OrthoLattice& L1 = source.lattice();
  const OrthoLattice& L2 = target.lattice();
  if (!k.source || !k.target || !k.source->same_structure(L1) || !k.target->same_structure(L2) ||
      k.map.size() != L1.size()) {
    throw InputError("isomorphism does not match the Γ objects");
  }
  const SasakiMonoid& S1 = *source.monoid();
  const SasakiMonoid& S2 = *target.monoid();
  GammaMorphism out{&source, &target, std::vector<MonoidIndex>(S1.size())};
  for (MonoidIndex f = 0; f < S1.size(); ++f) {
    Word image;
    for (Elem m : S1.witness_word(f)) image.push_back(k(m));
    const MonoidIndex g = S2.evaluate(image);
    const EndoMap& ef = S1.element(f);
    const EndoMap& eg = S2.element(g);
    for (Elem x = 0; x < L1.size(); ++x) {
      if (eg(k(x)) != k(ef(x))) {
        throw VerificationError("gamma_arrow", "conjugate differs from the witness-word image",
                                {"conjugation", {f, x}, {}, "k ∘ f ∘ k⁻¹ != word image at k(x)"});
      }
    }
    out.sigma[f] = g;
  }
  return out;
}

Verdict check_gamma_equivariance(const GammaMorphism& gk, const GammaMorphism& inverse,
                                 const Budget& budget) {
  Verdict v;
  const GammaAlgebra& src = *gk.source;
  const GammaAlgebra& dst = *gk.target;
  detail::for_each_tuple<GammaAlgebra, 1>(src, budget, "gamma.equivariance", v,
                                          [&](const std::array<DynSet, 1>& t) {
    const DynSet& a = t[0];
    if (!(gk(src.neg(a)) == dst.neg(gk(a)))) {
      v.result.fail(detail::witness(src, "equivariance", "Γ(k)(∼A) != ∼Γ(k)(A)", a));
    }
    if (!(inverse(gk(a)) == a)) {
      v.result.fail(detail::witness(src, "left_inverse", "Γ(k⁻¹)(Γ(k)(A)) != A", a));
    }
  });
  detail::for_each_tuple<GammaAlgebra, 1>(dst, budget, "gamma.right_inverse", v,
                                          [&](const std::array<DynSet, 1>& t) {
    if (!(gk(inverse(t[0])) == t[0])) {
      v.result.fail(detail::witness(dst, "right_inverse", "Γ(k)(Γ(k⁻¹)(B)) != B", t[0]));
    }
  });
  return v;
}

}  // namespace orthodyn
