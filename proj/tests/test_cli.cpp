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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "orthodyn/catalog.hpp"
#include "orthodyn/cli.hpp"
#include "orthodyn/gamma.hpp"
#include "orthodyn/io.hpp"
#include "orthodyn/table_algebra.hpp"

using namespace orthodyn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("orthodyn_test_cli_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("verify-oml") {
  CHECK(run({"verify-oml", "catalog:mo2"}).code == kExitPass);
  const Run o6 = run({"--format", "json", "verify-oml", "catalog:o6"});
  CHECK(o6.code == kExitFail);
  const auto doc = nlohmann::json::parse(o6.out);
  CHECK(doc["checks"]["orthomodular"]["status"] == "fail");
  CHECK(doc["checks"]["orthomodular"]["witnesses"][0]["elements"] == nlohmann::json{"a", "b"});
  CHECK(doc["checks"]["ortholattice"]["status"] == "pass");
}

TEST_CASE("verify-oml on a lattice file") {
  const auto path = scratch("mo3.json");
  write(path, serialize_lattice(gen_mo(3)));
  CHECK(run({"verify-oml", path.string()}).code == kExitPass);
  std::filesystem::remove(path);
}

TEST_CASE("input errors exit with usage status") {
  CHECK(run({"verify-oml", "/nonexistent/lattice.json"}).code == kExitUsage);
  CHECK(run({"verify-oml", "catalog:cube"}).code == kExitUsage);
  const auto path = scratch("bad.json");
  write(path, "{\"n\": 2}");
  const Run r = run({"roundtrip", path.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("input error") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate", "catalog:mo2"}).code == kExitUsage);
  CHECK(run({"roundtrip"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "roundtrip", "catalog:mo1"}).code == kExitUsage);
  CHECK(run({"--samples", "many", "roundtrip", "catalog:mo1"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("roundtrip JSON lists every stage") {
  const Run r = run({"--format", "json", "--samples", "2000", "roundtrip", "catalog:mo1"});
  CHECK(r.code == kExitPass);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["verdict"] == "pass");
  std::vector<std::string> names;
  for (const auto& [k, v] : doc["stages"].items()) {
    names.push_back(k);
    CHECK(v["status"] == "pass");
  }
  CHECK(names == std::vector<std::string>{"lattice", "monoid", "gamma", "foda", "psi", "mu", "lambda",
                                          "functor_laws", "naturality"});
  CHECK(doc["stages"]["monoid"]["size"] == 4);
  CHECK(doc["budget"]["samples"] == 2000);
}

TEST_CASE("roundtrip on O6 fails") {
  const Run r = run({"--format", "json", "roundtrip", "catalog:o6"});
  CHECK(r.code == kExitFail);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "fail");
  CHECK(doc["stages"]["lattice"]["status"] == "fail");
  CHECK(doc["stages"]["naturality"]["status"] == "skipped");
}

TEST_CASE("gamma export feeds check-foda") {
  const auto exported = scratch("gamma_b2.json");
  const auto report = scratch("gamma_b2_report.json");
  const Run g = run({"gamma", "catalog:boolean:2", "--export", exported.string(), "--report", report.string()});
  REQUIRE(g.code == kExitPass);
  const auto stats = nlohmann::json::parse(read_file(report.string()));
  CHECK(stats["monoid"]["size"] == 4);
  CHECK(stats["carrier_size"] == 16);
  CHECK(is_algebra_document(read_file(exported.string())));
  const Run f = run({"--format", "json", "check-foda", exported.string()});
  CHECK(f.code == kExitPass);
  const auto doc = nlohmann::json::parse(f.out);
  CHECK(doc["passed"] == true);
  for (int i = 1; i <= 7; ++i) CHECK(doc["FODA" + std::to_string(i)]["status"] == "pass");
  std::filesystem::remove(exported);
  std::filesystem::remove(report);
}

TEST_CASE("check-foda on a failing algebra file") {
  auto doc = nlohmann::json::parse(serialize_algebra(materialize(GammaAlgebra::build(share(gen_boolean(1))))));
  // Star becomes the constant zero map, which breaks the involution law.
  for (auto& s : doc["star"]) s = doc["zero"];
  const auto path = scratch("broken.json");
  write(path, doc.dump());
  const Run r = run({"--format", "json", "check-foda", path.string()});
  CHECK(r.code == kExitFail);
  CHECK(nlohmann::json::parse(r.out)["FODA1"]["status"] == "fail");
  std::filesystem::remove(path);
}

TEST_CASE("automorphisms") {
  const Run r = run({"--format", "json", "automorphisms", "catalog:mo2"});
  CHECK(r.code == kExitPass);
  CHECK(nlohmann::json::parse(r.out)["automorphisms"].size() == 8);
  CHECK(run({"automorphisms", "catalog:boolean:3"}).out.rfind("6 automorphisms", 0) == 0);
}

TEST_CASE("naturality") {
  const Run r = run({"--format", "json", "naturality", "catalog:boolean:2"});
  CHECK(r.code == kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["automorphisms"].size() == 2);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> args{"--seed", "7", "--format", "json", "roundtrip", "catalog:mo3"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  const Run c = run({"--seed", "8", "--format", "json", "roundtrip", "catalog:mo3"});
  CHECK(nlohmann::json::parse(c.out)["budget"]["seed"] == 8);
}

TEST_CASE("text output") {
  const Run r = run({"--format", "text", "roundtrip", "catalog:boolean:1"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("naturality") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
}
