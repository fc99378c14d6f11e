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

#include "orthodyn/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace orthodyn {

EndoMap EndoMap::identity(std::size_t n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return EndoMap(std::move(v));
}

EndoMap EndoMap::after(const EndoMap& g) const {
  std::vector<Elem> v(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    v[x] = values_[g.values_[x]];
  }
  return EndoMap(std::move(v));
}

std::size_t EndoMapHash::operator()(const EndoMap& f) const noexcept {
  // FNV-1a over the value vector.
  std::uint64_t h = 1469598103934665603ull;
  for (Elem v : f.values()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::string pair_text(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

OrthoLattice OrthoLattice::build(
    std::size_t n, std::span<const std::pair<Elem, Elem>> leq_pairs,
    std::vector<Elem> ortho, std::vector<std::string> names, OrthoLaws laws) {
  std::vector<bool> leq(n * n, false);
  for (auto [i, j] : leq_pairs) {
    if (i >= n || j >= n) {
      throw LatticeError(LatticeError::Kind::kShape,
                         "leq pair " + pair_text(i, j) + " out of range", i, j);
    }
    leq[i * n + j] = true;
  }
  return from_matrix(n, std::move(leq), std::move(ortho), std::move(names),
                     laws);
}

OrthoLattice OrthoLattice::from_matrix(std::size_t n, std::vector<bool> leq,
                                       std::vector<Elem> ortho,
                                       std::vector<std::string> names,
                                       OrthoLaws laws) {
  using K = LatticeError::Kind;
  if (n == 0) {
    throw LatticeError(K::kShape, "lattice must have at least one element");
  }
  if (leq.size() != n * n) {
    throw LatticeError(K::kShape, "order matrix has wrong size");
  }
  if (ortho.size() != n) {
    throw LatticeError(K::kShape, "ortho must list exactly n elements");
  }
  if (!names.empty() && names.size() != n) {
    throw LatticeError(K::kShape, "names must list exactly n labels");
  }

  // Reflexive-transitive closure (Warshall).
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) {
          leq[i * n + j] = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw LatticeError(K::kAntisymmetry,
                           "order is not antisymmetric: " + pair_text(i, j) +
                               " are mutually below each other",
                           i, j);
      }
    }
  }

  OrthoLattice L;
  L.n_ = n;
  L.leq_ = std::move(leq);
  L.names_ = std::move(names);

  auto below_all = [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!L.leq_[x * n + y]) return false;
    }
    return true;
  };
  auto above_all = [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!L.leq_[y * n + x]) return false;
    }
    return true;
  };
  std::optional<Elem> bottom;
  std::optional<Elem> top;
  for (std::size_t x = 0; x < n; ++x) {
    if (below_all(x)) bottom = static_cast<Elem>(x);
    if (above_all(x)) top = static_cast<Elem>(x);
  }
  if (!bottom) throw LatticeError(K::kNoBottom, "order has no least element");
  if (!top) throw LatticeError(K::kNoTop, "order has no greatest element");
  L.bottom_ = *bottom;
  L.top_ = *top;

  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::optional<Elem> glb;
      std::optional<Elem> lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (L.leq_[c * n + a] && L.leq_[c * n + b]) {
          if (!glb || L.leq_[*glb * n + c]) {
            glb = static_cast<Elem>(c);
          }
        }
        if (L.leq_[a * n + c] && L.leq_[b * n + c]) {
          if (!lub || L.leq_[c * n + *lub]) {
            lub = static_cast<Elem>(c);
          }
        }
      }
      // The running candidate is maximal among those seen; verify it is the
      // greatest lower bound (resp. least upper bound).
      for (std::size_t c = 0; c < n; ++c) {
        if (L.leq_[c * n + a] && L.leq_[c * n + b] && !L.leq_[c * n + *glb]) {
          throw LatticeError(K::kNoMeet,
                             "no greatest lower bound for " + pair_text(a, b),
                             a, b);
        }
        if (L.leq_[a * n + c] && L.leq_[b * n + c] && !L.leq_[*lub * n + c]) {
          throw LatticeError(K::kNoJoin,
                             "no least upper bound for " + pair_text(a, b), a,
                             b);
        }
      }
      L.meet_[a * n + b] = L.meet_[b * n + a] = *glb;
      L.join_[a * n + b] = L.join_[b * n + a] = *lub;
    }
  }

  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (ortho[i] >= n || seen[ortho[i]]) {
      throw LatticeError(K::kNotPermutation,
                         "ortho is not a permutation at index " +
                             std::to_string(i),
                         static_cast<std::int64_t>(i),
                         static_cast<std::int64_t>(ortho[i]));
    }
    seen[ortho[i]] = true;
  }
  L.ortho_ = std::move(ortho);

  L.down_.assign(n, 0);
  L.up_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (L.leq_[b * n + a]) ++L.down_[a];
      if (L.leq_[a * n + b]) ++L.up_[a];
    }
  }

  if (laws == OrthoLaws::kEnforce) {
    auto verdict = check_ortholattice(L);
    if (!verdict.passed()) {
      const auto& v = verdict.violations().front();
      throw LatticeError(K::kOrtho,
                         "ortho violates the " + v.clause + " law: " + v.detail,
                         v.indices.empty() ? -1 : v.indices[0],
                         v.indices.size() < 2 ? -1 : v.indices[1]);
    }
  }
  return L;
}

Elem OrthoLattice::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem OrthoLattice::meet_all(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

std::string OrthoLattice::name(Elem a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

std::optional<Elem> OrthoLattice::find_name(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

bool OrthoLattice::same_structure(const OrthoLattice& other) const {
  return n_ == other.n_ && leq_ == other.leq_ && ortho_ == other.ortho_;
}

CheckResult check_ortholattice(const OrthoLattice& L) {
  CheckResult result;
  const auto n = static_cast<Elem>(L.size());
  for (Elem m = 0; m < n; ++m) {
    const Elem c = L.ortho(m);
    if (L.meet(m, c) != L.bottom() || L.join(m, c) != L.top()) {
      result.fail({"complement",
                   {m},
                   {},
                   "m ∧ m⊥ = " + L.name(L.meet(m, c)) + ", m ∨ m⊥ = " +
                       L.name(L.join(m, c))});
      break;
    }
  }
  bool antitone_done = false;
  for (Elem m = 0; m < n && !antitone_done; ++m) {
    for (Elem k = 0; k < n; ++k) {
      if (L.leq(m, k) && !L.leq(L.ortho(k), L.ortho(m))) {
        result.fail({"antitone", {m, k}, {}, "m <= n but n⊥ is not <= m⊥"});
        antitone_done = true;
        break;
      }
    }
  }
  for (Elem m = 0; m < n; ++m) {
    if (L.ortho(L.ortho(m)) != m) {
      result.fail({"involution", {m}, {}, "m⊥⊥ != m"});
      break;
    }
  }
  return result;
}

CheckResult check_orthomodular(const OrthoLattice& L) {
  CheckResult result;
  const auto n = static_cast<Elem>(L.size());
  for (Elem m = 0; m < n; ++m) {
    for (Elem k = 0; k < n; ++k) {
      if (!L.leq(m, k)) continue;
      const Elem rhs = L.join(m, L.meet(L.ortho(m), k));
      if (rhs != k) {
        result.fail({"orthomodular",
                     {m, k},
                     {},
                     "m ∨ (m⊥ ∧ n) = " + L.name(rhs) + " != " + L.name(k)});
        return result;
      }
    }
  }
  return result;
}

EndoMap sasaki_projection(const OrthoLattice& L, Elem m) {
  std::vector<Elem> v(L.size());
  for (Elem x = 0; x < L.size(); ++x) v[x] = L.project(m, x);
  return EndoMap(std::move(v));
}

EndoMap sasaki_hook(const OrthoLattice& L, Elem m) {
  std::vector<Elem> v(L.size());
  for (Elem x = 0; x < L.size(); ++x) v[x] = L.hook(m, x);
  return EndoMap(std::move(v));
}

CheckResult check_adjunction(const OrthoLattice& L) {
  CheckResult result;
  const auto n = static_cast<Elem>(L.size());
  for (Elem m = 0; m < n; ++m) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const bool lhs = L.leq(L.project(m, x), y);
        const bool rhs = L.leq(x, L.hook(m, y));
        if (lhs != rhs) {
          result.fail({"adjunction",
                       {m, x, y},
                       {},
                       lhs ? "π_m(x) <= y but x is not <= hook_m(y)"
                           : "x <= hook_m(y) but π_m(x) is not <= y"});
          return result;
        }
      }
    }
  }
  return result;
}

CheckResult check_join_preservation(const OrthoLattice& L,
                                    std::size_t max_subset_size) {
  CheckResult result;
  const std::size_t n = L.size();
  const std::size_t limit =
      n <= kJoinPreservationExhaustive ? n : std::min(max_subset_size, n);

  // Enumerate subsets in increasing cardinality, each as a sorted index list.
  std::vector<Elem> subset;
  std::vector<Elem> images;
  auto test = [&](Elem m) {
    images.clear();
    for (Elem a : subset) images.push_back(L.project(m, a));
    const Elem lhs = L.project(m, L.join_all(subset));
    const Elem rhs = L.join_all(images);
    if (lhs != rhs) {
      Violation v{"join_preservation", {m}, {}, ""};
      v.indices.insert(v.indices.end(), subset.begin(), subset.end());
      v.detail = "π_m(⋁A) = " + L.name(lhs) + " but ⋁π_m(A) = " + L.name(rhs);
      result.fail(std::move(v));
      return false;
    }
    return true;
  };
  for (std::size_t k = 0; k <= limit; ++k) {
    // Combinations of size k via index odometer.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      subset.assign(idx.begin(), idx.end());
      for (Elem m = 0; m < n; ++m) {
        if (!test(m)) return result;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return result;
}

OrthoMorphism OrthoMorphism::identity(LatticePtr lattice) {
  const auto n = lattice->size();
  std::vector<Elem> map(n);
  std::iota(map.begin(), map.end(), Elem{0});
  return {lattice, lattice, std::move(map)};
}

OrthoMorphism compose(const OrthoMorphism& second, const OrthoMorphism& first) {
  if (first.target->size() != second.source->size()) {
    throw InputError("compose: morphisms are not composable");
  }
  std::vector<Elem> map(first.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = second.map[first.map[i]];
  }
  return {first.source, second.target, std::move(map)};
}

OrthoMorphism inverse(const OrthoMorphism& f) {
  std::vector<Elem> inv(f.map.size(), 0);
  std::vector<bool> hit(f.map.size(), false);
  for (std::size_t i = 0; i < f.map.size(); ++i) {
    if (f.map[i] >= inv.size() || hit[f.map[i]]) {
      throw InputError("inverse: map is not a bijection");
    }
    hit[f.map[i]] = true;
    inv[f.map[i]] = static_cast<Elem>(i);
  }
  return {f.target, f.source, std::move(inv)};
}

CheckResult check_ortho_iso(const OrthoMorphism& f) {
  CheckResult result;
  const auto& S = *f.source;
  const auto& T = *f.target;
  if (f.map.size() != S.size() || S.size() != T.size()) {
    result.fail({"size",
                 {static_cast<std::int64_t>(f.map.size()),
                  static_cast<std::int64_t>(S.size()),
                  static_cast<std::int64_t>(T.size())},
                 {},
                 "map length, source size and target size must agree"});
    return result;
  }
  const auto n = static_cast<Elem>(S.size());
  std::vector<std::int64_t> preimage(n, -1);
  for (Elem m = 0; m < n; ++m) {
    if (f(m) >= n) {
      result.fail({"bijective", {m}, {}, "image out of range"});
      return result;
    }
    if (preimage[f(m)] >= 0) {
      result.fail({"bijective", {preimage[f(m)], m}, {}, "two elements share an image"});
      return result;
    }
    preimage[f(m)] = m;
  }
  for (Elem a = 0; a < n; ++a) {
    bool stop = false;
    for (Elem b = 0; b < n && !stop; ++b) {
      if (S.leq(a, b) != T.leq(f(a), f(b))) {
        result.fail({"order", {a, b}, {}, "m <= n does not match g(m) <= g(n)"});
        stop = true;
      }
    }
    if (stop) break;
  }
  for (Elem m = 0; m < n; ++m) {
    if (f(S.ortho(m)) != T.ortho(f(m))) {
      result.fail({"ortho", {m}, {}, "g(m⊥) != g(m)⊥"});
      break;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    bool stop = false;
    for (Elem b = 0; b < n && !stop; ++b) {
      if (f(S.join(a, b)) != T.join(f(a), f(b))) {
        result.fail({"join", {a, b}, {}, "g(m ∨ n) != g(m) ∨ g(n)"});
        stop = true;
      } else if (f(S.meet(a, b)) != T.meet(f(a), f(b))) {
        result.fail({"meet", {a, b}, {}, "g(m ∧ n) != g(m) ∧ g(n)"});
        stop = true;
      }
    }
    if (stop) break;
  }
  return result;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const OrthoLattice& s, const OrthoLattice& t) : s_(s), t_(t) {}

  std::vector<std::vector<Elem>> run() {
    if (s_.size() != t_.size()) return {};
    const std::size_t n = s_.size();
    map_.assign(n, kUnset);
    used_.assign(n, false);
    // Bottom and top are fixed by any isomorphism.
    if (!compatible(s_.bottom(), t_.bottom())) return {};
    assign(s_.bottom(), t_.bottom());
    if (map_[s_.top()] == kUnset) {
      if (!compatible(s_.top(), t_.top())) return {};
      assign(s_.top(), t_.top());
    } else if (map_[s_.top()] != t_.top()) {
      return {};
    }
    recurse(0);
    return std::move(found_);
  }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  bool consistent_pair(Elem x, Elem y) const {
    if (s_.down_count(x) != t_.down_count(y) ||
        s_.up_count(x) != t_.up_count(y)) {
      return false;
    }
    for (Elem z = 0; z < s_.size(); ++z) {
      if (map_[z] == kUnset) continue;
      if (s_.leq(x, z) != t_.leq(y, map_[z]) ||
          s_.leq(z, x) != t_.leq(map_[z], y)) {
        return false;
      }
    }
    return true;
  }

  bool compatible(Elem x, Elem y) const {
    if (used_[y]) return false;
    const Elem xo = s_.ortho(x);
    const Elem yo = t_.ortho(y);
    if ((xo == x) != (yo == y)) return false;
    if (xo != x) {
      if (map_[xo] != kUnset) return map_[xo] == yo && consistent_pair(x, y);
      if (used_[yo]) return false;
    }
    if (!consistent_pair(x, y)) return false;
    if (xo != x) {
      // Check the partner against everything assigned plus (x, y).
      if (s_.down_count(xo) != t_.down_count(yo) ||
          s_.up_count(xo) != t_.up_count(yo)) {
        return false;
      }
      for (Elem z = 0; z < s_.size(); ++z) {
        const Elem fz = (z == x) ? y : map_[z];
        if (fz == kUnset) continue;
        if (s_.leq(xo, z) != t_.leq(yo, fz) ||
            s_.leq(z, xo) != t_.leq(fz, yo)) {
          return false;
        }
      }
    }
    return true;
  }

  void assign(Elem x, Elem y) {
    map_[x] = y;
    used_[y] = true;
    map_[s_.ortho(x)] = t_.ortho(y);
    used_[t_.ortho(y)] = true;
  }

  void unassign(Elem x) {
    used_[map_[x]] = false;
    used_[map_[s_.ortho(x)]] = false;
    map_[s_.ortho(x)] = kUnset;
    map_[x] = kUnset;
  }

  void recurse(Elem x) {
    const auto n = static_cast<Elem>(s_.size());
    while (x < n && map_[x] != kUnset) ++x;
    if (x == n) {
      found_.push_back(map_);
      return;
    }
    for (Elem y = 0; y < n; ++y) {
      if (!compatible(x, y)) continue;
      assign(x, y);
      recurse(x + 1);
      unassign(x);
    }
  }

  const OrthoLattice& s_;
  const OrthoLattice& t_;
  std::vector<Elem> map_;
  std::vector<bool> used_;
  std::vector<std::vector<Elem>> found_;
};

}  // namespace

std::vector<OrthoMorphism> enumerate_isomorphisms(const LatticePtr& source,
                                                  const LatticePtr& target) {
  if (source->size() > kAutomorphismSizeGuard ||
      target->size() > kAutomorphismSizeGuard) {
    throw InputError("isomorphism search is limited to lattices of at most " +
                     std::to_string(kAutomorphismSizeGuard) + " elements");
  }
  auto maps = IsoSearch(*source, *target).run();
  std::sort(maps.begin(), maps.end());
  std::vector<OrthoMorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) {
    OrthoMorphism f{source, target, std::move(m)};
    // The search enforces every clause, so this only guards regressions.
    if (check_ortho_iso(f).passed()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<OrthoMorphism> enumerate_automorphisms(const LatticePtr& lattice) {
  return enumerate_isomorphisms(lattice, lattice);
}

}  // namespace orthodyn
