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

#include "orthodyn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "orthodyn/catalog.hpp"
#include "orthodyn/equivalence.hpp"
#include "orthodyn/foda.hpp"
#include "orthodyn/functors.hpp"
#include "orthodyn/gamma.hpp"
#include "orthodyn/io.hpp"
#include "orthodyn/report.hpp"
#include "orthodyn/table_algebra.hpp"

namespace orthodyn {

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  std::uint64_t threshold = std::uint64_t{1} << 20;
  std::string format = "text";
  std::string input;
  std::string report_path;
  std::string export_path;

  [[nodiscard]] Budget budget() const { return {threshold, samples, seed}; }
  [[nodiscard]] bool json() const { return format == "json"; }
};

LatticePtr load_lattice(const std::string& arg) {
  if (is_catalog_spec(arg)) return share(catalog_lattice(arg));
  return share(parse_lattice(read_file(arg)));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void print_witnesses(std::ostream& out, const CheckResult& r, const char* indent = "    ") {
  for (const auto& v : r.violations()) out << indent << to_text(v) << "\n";
}

/// Copies lattice violations with element names filled in from indices.
CheckResult named(const OrthoLattice& L, const CheckResult& r) {
  CheckResult out;
  for (auto v : r.violations()) {
    if (v.elements.empty()) {
      for (auto i : v.indices) v.elements.push_back(L.name(static_cast<Elem>(i)));
    }
    out.fail(std::move(v));
  }
  return out;
}

int cmd_verify_oml(const Options& o, std::ostream& out) {
  const LatticePtr L = load_lattice(o.input);
  const CheckResult ol = named(*L, check_ortholattice(*L));
  const CheckResult om = named(*L, check_orthomodular(*L));
  const CheckResult adj = named(*L, check_adjunction(*L));
  CheckResult jp;
  if (om.passed()) jp = named(*L, check_join_preservation(*L, 3));
  CheckResult agreement;
  if (om.passed() != adj.passed()) {
    agreement.fail({"adjunction_agreement", {}, {}, "adjunction and orthomodularity disagree"});
  }
  const bool pass = ol.passed() && om.passed() && adj.passed() && jp.passed() && agreement.passed();
  const std::vector<std::pair<const char*, const CheckResult*>> checks{
      {"ortholattice", &ol}, {"orthomodular", &om}, {"adjunction", &adj},
      {"adjunction_agreement", &agreement}, {"join_preservation", &jp}};
  if (o.json()) {
    Json j;
    j["lattice"] = o.input;
    j["size"] = L->size();
    for (const auto& [name, r] : checks) {
      Json c;
      c["status"] = r == &jp && !om.passed() ? "skipped" : r->passed() ? "pass" : "fail";
      c["witnesses"] = to_json(*r);
      j["checks"][name] = std::move(c);
    }
    j["verdict"] = pass ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    out << o.input << " (" << L->size() << " elements)\n";
    for (const auto& [name, r] : checks) {
      const char* status = r == &jp && !om.passed() ? "skipped" : r->passed() ? "pass" : "fail";
      out << "  " << name << ": " << status << "\n";
      print_witnesses(out, *r);
    }
    out << (pass ? "orthomodular lattice\n" : "not an orthomodular lattice\n");
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_gamma(const Options& o, std::ostream& out) {
  const LatticePtr L = load_lattice(o.input);
  const GammaAlgebra gamma = GammaAlgebra::build(L);
  const auto tilde = tilde_set(gamma);
  const auto span = tilde_span(gamma, tilde);
  Json j;
  j["lattice"] = o.input;
  j["lattice_size"] = L->size();
  j["monoid"] = monoid_json(*gamma.monoid());
  j["carrier_log2"] = gamma.carrier_log2();
  if (auto n = gamma.carrier_size()) j["carrier_size"] = *n;
  j["tilde_size"] = tilde.size();
  j["span_size"] = span.size();
  if (!o.report_path.empty()) write_file(o.report_path, j.dump(2) + "\n");
  if (!o.export_path.empty()) write_file(o.export_path, serialize_algebra(materialize(gamma)));
  if (o.json()) {
    out << j.dump(2) << "\n";
  } else {
    const auto& m = j["monoid"];
    out << "Γ(" << o.input << ")\n"
        << "  |M| = " << L->size() << "\n"
        << "  |S_M| = " << m["size"] << " (audit: " << m["audit"]["collisions"].get<std::size_t>()
        << " collisions, " << m["audit"]["status"].get<std::string>() << ")\n"
        << "  carrier = 2^" << gamma.universe() << "\n"
        << "  |K̃| = " << tilde.size() << ", |⟨K̃⟩| = " << span.size() << "\n";
  }
  return kExitPass;
}

int print_foda(const Options& o, const FodaReport& report, std::ostream& out) {
  if (o.json()) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_check_foda(const Options& o, std::ostream& out) {
  if (!is_catalog_spec(o.input)) {
    const std::string text = read_file(o.input);
    if (is_algebra_document(text)) {
      const TableAlgebra alg(parse_algebra(text));
      return print_foda(o, check_foda(alg, o.budget()), out);
    }
  }
  const GammaAlgebra gamma = GammaAlgebra::build(load_lattice(o.input));
  return print_foda(o, check_foda(gamma, o.budget()), out);
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  const RoundtripReport report = roundtrip(load_lattice(o.input), o.input, o.budget());
  if (o.json()) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
  return report.passed() ? kExitPass : kExitFail;
}

std::string format_map(const OrthoLattice& L, const OrthoMorphism& k) {
  std::string s;
  for (Elem m = 0; m < L.size(); ++m) s += (m ? " " : "") + L.name(m) + "→" + L.name(k(m));
  return s;
}

int cmd_automorphisms(const Options& o, std::ostream& out) {
  const LatticePtr L = load_lattice(o.input);
  const auto autos = enumerate_automorphisms(L);
  CheckResult all;
  for (const auto& k : autos) all.merge(check_ortho_iso(k));
  if (o.json()) {
    Json j;
    j["lattice"] = o.input;
    j["count"] = autos.size();
    Json maps = Json::array();
    for (const auto& k : autos) maps.push_back(k.map);
    j["automorphisms"] = std::move(maps);
    j["witnesses"] = to_json(all);
    out << j.dump(2) << "\n";
  } else {
    out << autos.size() << " automorphisms of " << o.input << "\n";
    for (const auto& k : autos) out << "  " << format_map(*L, k) << "\n";
    print_witnesses(out, all);
  }
  return all.passed() ? kExitPass : kExitFail;
}

int cmd_naturality(const Options& o, std::ostream& out) {
  const LatticePtr L = load_lattice(o.input);
  const GammaAlgebra gamma = GammaAlgebra::build(L);
  const auto psi = psi_object(gamma);
  const OrthoMorphism mu = mu_component(gamma, psi);
  const auto lambda = lambda_component(gamma, psi);
  const auto autos = enumerate_automorphisms(L);
  Budget each = o.budget();
  each.samples = std::max<std::uint64_t>(kMinSamplesPerMorphism, o.samples / autos.size());
  bool pass = true;
  Json rows = Json::array();
  std::ostringstream text;
  for (const auto& k : autos) {
    const GammaMorphism gk = gamma_arrow(k, gamma, gamma);
    const auto phi = gk.as_foda();
    const Verdict mu_sq = check_mu_naturality(k, mu, mu, psi_arrow(phi, psi, psi));
    const Verdict lambda_sq = check_lambda_naturality(phi, lambda, lambda, each);
    pass = pass && mu_sq.passed() && lambda_sq.passed();
    Json row;
    row["map"] = k.map;
    row["mu"] = to_json(mu_sq, each.seed);
    row["lambda"] = to_json(lambda_sq, each.seed);
    rows.push_back(std::move(row));
    text << "  " << format_map(*L, k) << "\n    μ square: " << (mu_sq.passed() ? "commutes" : "fails")
         << "\n    λ square: " << (lambda_sq.passed() ? "commutes" : "fails")
         << (lambda_sq.exhaustive ? "" : " (sampled)") << "\n";
    print_witnesses(text, mu_sq.result, "      ");
    print_witnesses(text, lambda_sq.result, "      ");
  }
  if (o.json()) {
    Json j;
    j["lattice"] = o.input;
    j["automorphisms"] = std::move(rows);
    j["verdict"] = pass ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    out << "naturality over " << autos.size() << " automorphisms of " << o.input << "\n"
        << text.str() << (pass ? "all squares commute\n" : "naturality failures found\n");
  }
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite orthomodular lattices and their dynamic algebras", "orthodyn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for all sampled checks")->capture_default_str();
  app.add_option("--samples", o.samples, "Samples per sampled check")->capture_default_str();
  app.add_option("--exhaustive-threshold", o.threshold, "Largest enumeration done exhaustively")
      ->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  using Command = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const char* name, const char* help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Lattice file or catalog:SPEC")->required();
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("verify-oml", "Check the ortholattice and orthomodular laws", cmd_verify_oml);
  CLI::App* gamma = add("gamma", "Build Γ and print monoid and carrier statistics", cmd_gamma);
  gamma->add_option("--report", o.report_path, "Also write the JSON statistics here");
  gamma->add_option("--export", o.export_path, "Write Γ as an explicit algebra file (small carriers)");
  add("check-foda", "Check FODA 1-7 on Γ of a lattice or on an algebra file", cmd_check_foda);
  add("roundtrip", "Run the full Γ/Ψ/μ/λ pipeline", cmd_roundtrip);
  add("automorphisms", "List all ortho-lattice automorphisms", cmd_automorphisms);
  add("naturality", "Check the μ and λ naturality squares", cmd_naturality);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(o, out);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n  " << to_text(e.witness()) << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace orthodyn
