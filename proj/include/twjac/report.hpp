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

#ifndef TWJAC_REPORT_HPP_
#define TWJAC_REPORT_HPP_

#include <gmpxx.h>

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "twjac/cyclo.hpp"

namespace twjac {

using Json = nlohmann::ordered_json;

// kInfo records carry no claim to verify (e.g. rank(A) >= 2).
enum class Verdict { kPass, kFail, kInfo };

struct CheckRecord {
  std::string id;
  std::string statement;
  Json inputs = Json::object();
  Json expected;
  Json computed;
  Verdict verdict = Verdict::kPass;
  double wall_ms = 0;
};

// {"L": L, "terms": {"k": "c", ...}} over the canonical basis, plus
// "rational" when the value is rational.
Json to_json(const CycNum& v);
Json to_json(const mpz_class& v);
Json to_json(const mpq_class& v);
std::string verdict_name(Verdict v);

class Report {
 public:
  void add(CheckRecord r) { records_.push_back(std::move(r)); }
  const std::vector<CheckRecord>& records() const { return records_; }
  bool all_pass() const;
  void clear_timing();
  Json to_json() const;
  void write_table(std::ostream& out) const;

 private:
  std::vector<CheckRecord> records_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace twjac

#endif  // TWJAC_REPORT_HPP_
