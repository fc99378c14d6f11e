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

// JSON lattice and algebra files.
//
// Lattice: {"n": 6, "leq": [[i, j], ...], "ortho": [...], "names": [...]}.
// Algebra: {"size": n, "join": [[...], ...], "mul": [[...], ...],
//           "neg": [...], "star": [...], "zero": z, "unit": e, "top": t,
//           "names": [...]}.

#ifndef ORTHODYN_IO_HPP_
#define ORTHODYN_IO_HPP_

#include <string>
#include <string_view>

#include "orthodyn/lattice.hpp"
#include "orthodyn/table_algebra.hpp"

namespace orthodyn {

/// Throws InputError on syntax or schema errors and LatticeError when the
/// relation is not an ortholattice.
[[nodiscard]] OrthoLattice parse_lattice(std::string_view text);

/// Writes every non-reflexive pair of the order, so parsing reproduces the
/// same indexed structure.
[[nodiscard]] std::string serialize_lattice(const OrthoLattice& lattice);

[[nodiscard]] AlgebraTables parse_algebra(std::string_view text);
[[nodiscard]] std::string serialize_algebra(const TableAlgebra& algebra);

/// True when the JSON object has algebra fields rather than lattice ones.
[[nodiscard]] bool is_algebra_document(std::string_view text);

/// Whole-file read; throws InputError when the file cannot be opened.
[[nodiscard]] std::string read_file(const std::string& path);

}  // namespace orthodyn

#endif  // ORTHODYN_IO_HPP_
