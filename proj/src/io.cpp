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

#include "orthodyn/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace orthodyn {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON syntax error: ") + e.what());
  }
}

template <class T>
T field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  try {
    return doc.at(name).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + name + "\" has the wrong type");
  }
}

std::vector<std::uint32_t> flatten(const std::vector<std::vector<std::uint32_t>>& rows,
                                   std::size_t n, const char* name) {
  if (rows.size() != n) throw InputError(std::string(name) + ": expected " + std::to_string(n) + " rows");
  std::vector<std::uint32_t> out;
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError(std::string(name) + ": ragged table");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

OrthoLattice parse_lattice(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("lattice file must be a JSON object");
  const auto n = field<long long>(doc, "n");
  if (n <= 0) throw InputError("n must be positive");
  const auto pairs = field<std::vector<std::vector<long long>>>(doc, "leq");
  std::vector<std::pair<Elem, Elem>> leq;
  for (const auto& p : pairs) {
    if (p.size() != 2 || p[0] < 0 || p[1] < 0 || p[0] >= n || p[1] >= n) {
      throw InputError("leq entries must be [i, j] with 0 <= i, j < n");
    }
    leq.emplace_back(static_cast<Elem>(p[0]), static_cast<Elem>(p[1]));
  }
  const auto ortho_raw = field<std::vector<long long>>(doc, "ortho");
  std::vector<Elem> ortho;
  for (auto x : ortho_raw) {
    if (x < 0 || x >= n) throw InputError("ortho entries must lie in 0..n-1");
    ortho.push_back(static_cast<Elem>(x));
  }
  std::vector<std::string> names;
  if (doc.contains("names")) names = field<std::vector<std::string>>(doc, "names");
  return OrthoLattice::build(static_cast<std::size_t>(n), leq, std::move(ortho), std::move(names));
}

std::string serialize_lattice(const OrthoLattice& lattice) {
  json doc;
  doc["n"] = lattice.size();
  json leq = json::array();
  for (Elem i = 0; i < lattice.size(); ++i)
    for (Elem j = 0; j < lattice.size(); ++j)
      if (i != j && lattice.leq(i, j)) leq.push_back({i, j});
  doc["leq"] = std::move(leq);
  json ortho = json::array();
  for (Elem i = 0; i < lattice.size(); ++i) ortho.push_back(lattice.ortho(i));
  doc["ortho"] = std::move(ortho);
  if (!lattice.names().empty()) doc["names"] = lattice.names();
  return doc.dump(2) + "\n";
}

AlgebraTables parse_algebra(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("algebra file must be a JSON object");
  AlgebraTables t;
  const auto n = field<long long>(doc, "size");
  if (n <= 0) throw InputError("size must be positive");
  t.size = static_cast<std::size_t>(n);
  using Table = std::vector<std::vector<std::uint32_t>>;
  t.join = flatten(field<Table>(doc, "join"), t.size, "join");
  t.mul = flatten(field<Table>(doc, "mul"), t.size, "mul");
  t.neg = field<std::vector<std::uint32_t>>(doc, "neg");
  t.star = field<std::vector<std::uint32_t>>(doc, "star");
  t.zero = field<std::uint32_t>(doc, "zero");
  t.unit = field<std::uint32_t>(doc, "unit");
  t.top = field<std::uint32_t>(doc, "top");
  if (doc.contains("names")) t.names = field<std::vector<std::string>>(doc, "names");
  return t;
}

std::string serialize_algebra(const TableAlgebra& algebra) {
  const AlgebraTables& t = algebra.tables();
  auto rows = [&](const std::vector<std::uint32_t>& flat) {
    json out = json::array();
    for (std::size_t i = 0; i < t.size; ++i) {
      out.push_back(std::vector<std::uint32_t>(flat.begin() + i * t.size, flat.begin() + (i + 1) * t.size));
    }
    return out;
  };
  json doc;
  doc["size"] = t.size;
  doc["join"] = rows(t.join);
  doc["mul"] = rows(t.mul);
  doc["neg"] = t.neg;
  doc["star"] = t.star;
  doc["zero"] = t.zero;
  doc["unit"] = t.unit;
  doc["top"] = t.top;
  if (!t.names.empty()) doc["names"] = t.names;
  return doc.dump(2) + "\n";
}

bool is_algebra_document(std::string_view text) {
  const json doc = parse_json(text);
  return doc.is_object() && doc.contains("mul");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace orthodyn
