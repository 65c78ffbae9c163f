// Copyright 2026 The twjac Authors.
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

#include "twjac/report.hpp"

#include <iomanip>

namespace twjac {

Json to_json(const CycNum& v) {
  Json out;
  out["L"] = v.modulus();
  Json terms = Json::object();
  const auto coeffs = v.canonical();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) terms[std::to_string(k)] = coeffs[k].get_str();
  }
  out["terms"] = std::move(terms);
  if (auto r = v.as_rational()) out["rational"] = r->get_str();
  return out;
}

Json to_json(const mpz_class& v) { return v.get_str(); }
Json to_json(const mpq_class& v) { return v.get_str(); }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kInfo: return "info";
  }
  return "fail";
}

bool Report::all_pass() const {
  for (const auto& r : records_) {
    if (r.verdict == Verdict::kFail) return false;
  }
  return true;
}

void Report::clear_timing() {
  for (auto& r : records_) r.wall_ms = 0;
}

Json Report::to_json() const {
  Json out = Json::array();
  for (const auto& r : records_) {
    Json j;
    j["id"] = r.id;
    j["statement"] = r.statement;
    j["inputs"] = r.inputs;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["verdict"] = verdict_name(r.verdict);
    j["wall_ms"] = r.wall_ms;
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

std::string brief(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.contains("rational")) return j["rational"].get<std::string>();
  std::string s = j.dump();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

}  // namespace

void Report::write_table(std::ostream& out) const {
  out << std::left << std::setw(12) << "id" << std::setw(8) << "verdict" << std::setw(28)
      << "inputs" << std::setw(24) << "expected" << std::setw(24) << "computed"
      << "ms\n";
  for (const auto& r : records_) {
    out << std::left << std::setw(12) << r.id << std::setw(8) << verdict_name(r.verdict)
        << std::setw(28) << brief(r.inputs) << ' ' << std::setw(23) << brief(r.expected) << ' '
        << std::setw(23) << brief(r.computed) << ' ' << std::fixed << std::setprecision(1)
        << r.wall_ms << '\n';
  }
}

}  // namespace twjac
