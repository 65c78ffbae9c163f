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

#ifndef TWJAC_COMMANDS_HPP_
#define TWJAC_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "twjac/report.hpp"

namespace twjac {

enum class Format { kTable, kJson };

struct RunConfig {
  int p = 2;
  int e = 1;
  int n = 1;
  // e11 | corner | zero | path to a matrix file. Empty: per-command default.
  std::string a_choice;
  // Orbit position for dim/main/lemmas, exponent index for char.
  std::optional<std::uint64_t> theta;
  int jobs = 0;
  Format format = Format::kTable;
  std::uint64_t cap_enum = std::uint64_t{1} << 22;
  std::uint64_t cap_dlog = std::uint64_t{1} << 24;
  bool no_timing = false;
  std::string matrix;
  // identity only
  std::optional<int> a;
  std::optional<std::int64_t> q;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Report cmd_dim(const RunConfig& cfg);
Report cmd_main(const RunConfig& cfg);
Report cmd_lemmas(const RunConfig& cfg);
Report cmd_identity(const RunConfig& cfg);
Report cmd_char(const RunConfig& cfg);
Report cmd_bench(const RunConfig& cfg);

// Runs a subcommand and prints its report. Returns the exit code:
// 0 all checks pass, 1 a verification failed, 2 usage or configuration error.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace twjac

#endif  // TWJAC_COMMANDS_HPP_
