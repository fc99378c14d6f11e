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

#include "orthodyn/report.hpp"

#include <sstream>

namespace orthodyn {

Json to_json(const Violation& v) {
  Json j;
  j["clause"] = v.clause;
  if (!v.indices.empty()) j["indices"] = v.indices;
  if (!v.elements.empty()) j["elements"] = v.elements;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Json to_json(const CheckResult& r) {
  Json j = Json::array();
  for (const auto& v : r.violations()) j.push_back(to_json(v));
  return j;
}

Json to_json(const Verdict& v, std::uint64_t seed) {
  Json j;
  j["status"] = !v.passed() ? "fail" : v.exhaustive ? "pass" : "sampled-pass";
  j["mode"] = v.exhaustive ? "exhaustive" : "sampled";
  if (!v.exhaustive) {
    j["samples"] = v.samples;
    j["seed"] = seed;
  }
  j["witnesses"] = to_json(v.result);
  return j;
}

Json to_json(const FodaReport& report) {
  Json j;
  for (const auto& ax : report.axioms) {
    Json a = to_json(ax.verdict, report.seed);
    a["status"] = status_name(ax.status());
    a["note"] = ax.note;
    j[ax.id] = std::move(a);
  }
  j["passed"] = report.passed();
  return j;
}

namespace {

Json fact_json(const FactValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

}  // namespace

Json to_json(const RoundtripReport& report) {
  Json j;
  j["lattice"] = report.lattice_id;
  j["lattice_size"] = report.lattice_size;
  Json budget;
  budget["seed"] = report.seed;
  budget["samples"] = report.samples;
  budget["exhaustive_threshold"] = report.exhaustive_threshold;
  j["budget"] = std::move(budget);
  Json stages;
  for (const auto& st : report.stages) {
    Json s;
    s["status"] = status_name(st.status);
    if (st.status != StageStatus::kSkipped) {
      s["mode"] = st.exhaustive ? "exhaustive" : "sampled";
      if (!st.exhaustive) s["samples"] = st.samples;
    }
    for (const auto& [key, value] : st.facts) s[key] = fact_json(value);
    if (st.name == "foda" && report.foda) s["axioms"] = to_json(*report.foda);
    Json w = Json::array();
    for (const auto& v : st.witnesses) w.push_back(to_json(v));
    s["witnesses"] = std::move(w);
    stages[st.name] = std::move(s);
  }
  j["stages"] = std::move(stages);
  j["verdict"] = report.passed() ? "pass" : "fail";
  return j;
}

Json monoid_json(const SasakiMonoid& monoid) {
  Json j;
  j["size"] = monoid.size();
  j["generators"] = monoid.lattice()->size();
  Json hist;
  for (const auto& [len, count] : monoid.word_length_histogram()) hist[std::to_string(len)] = count;
  j["word_length_histogram"] = std::move(hist);
  std::size_t bad = 0;
  for (const auto& a : monoid.audit()) bad += a.consistent ? 0 : 1;
  Json audit;
  audit["collisions"] = monoid.audit().size();
  audit["failures"] = bad;
  audit["status"] = bad == 0 ? "pass" : "fail";
  j["audit"] = std::move(audit);
  return j;
}

std::string to_text(const Violation& v) {
  std::string s = v.clause;
  if (!v.elements.empty()) {
    s += " [";
    for (std::size_t i = 0; i < v.elements.size(); ++i) s += (i ? ", " : "") + v.elements[i];
    s += "]";
  } else if (!v.indices.empty()) {
    s += " [";
    for (std::size_t i = 0; i < v.indices.size(); ++i) s += (i ? ", " : "") + std::to_string(v.indices[i]);
    s += "]";
  }
  if (!v.detail.empty()) s += ": " + v.detail;
  return s;
}

std::string to_text(const FodaReport& report) {
  std::ostringstream out;
  for (const auto& ax : report.axioms) {
    out << ax.id << "  " << status_name(ax.status());
    if (!ax.verdict.exhaustive) out << " (" << ax.verdict.samples << " samples, seed " << report.seed << ")";
    out << "  " << ax.note << "\n";
    for (const auto& v : ax.verdict.result.violations()) out << "    " << to_text(v) << "\n";
  }
  out << (report.passed() ? "all axioms hold\n" : "axiom failures found\n");
  return out.str();
}

std::string to_text(const RoundtripReport& report) {
  std::ostringstream out;
  out << "roundtrip " << report.lattice_id << " (" << report.lattice_size << " elements, seed "
      << report.seed << ")\n";
  for (const auto& st : report.stages) {
    out << "  " << st.name << ": " << status_name(st.status);
    if (st.status != StageStatus::kSkipped && !st.exhaustive) out << " (sampled, " << st.samples << ")";
    for (const auto& [key, value] : st.facts) {
      out << "  " << key << "=";
      std::visit([&](const auto& x) { out << x; }, value);
    }
    out << "\n";
    for (const auto& v : st.witnesses) out << "    " << to_text(v) << "\n";
  }
  out << (report.passed() ? "verdict: pass\n" : "verdict: fail\n");
  return out.str();
}

}  // namespace orthodyn
