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

// Catalog lattices and the catalog-string parser ("boolean:3", "mo:2", "o6",
// "product(mo:2,boolean:1)", optionally prefixed by "catalog:").

#ifndef ORTHODYN_CATALOG_HPP_
#define ORTHODYN_CATALOG_HPP_

#include <string>
#include <string_view>

#include "orthodyn/lattice.hpp"

namespace orthodyn {

inline constexpr std::size_t kProductSizeGuard = 256;

/// Subsets of {1..n} under inclusion, ortho = complement; 0 <= n <= 5.
/// Element i is the subset with bitmask i.
[[nodiscard]] OrthoLattice gen_boolean(int n);

/// MO_n, 1 <= n <= 6: index 0 is bottom, then a, a', b, b', ..., top last.
[[nodiscard]] OrthoLattice gen_mo(int n);

/// The hexagon 0 < a < b < 1, 0 < b' < a' < 1, indexed 0, a, b, b', a', 1.
[[nodiscard]] OrthoLattice gen_o6();

/// Componentwise order and ortho; element (i, j) has index i * |L2| + j.
/// The result is validated as an ortholattice, not assumed orthomodular.
[[nodiscard]] OrthoLattice gen_product(const OrthoLattice& l1, const OrthoLattice& l2);

/// Parses a catalog spec. Throws InputError on unknown or malformed specs.
[[nodiscard]] OrthoLattice catalog_lattice(std::string_view spec);

/// True when `arg` names a catalog lattice rather than a file.
[[nodiscard]] bool is_catalog_spec(std::string_view arg);

}  // namespace orthodyn

#endif  // ORTHODYN_CATALOG_HPP_
