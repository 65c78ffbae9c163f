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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twjac/commands.hpp"

namespace {

void add_field_flags(CLI::App* cmd, twjac::RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "characteristic");
  cmd->add_option("--e", cfg.e, "q = p^e");
  cmd->add_option("--n", cfg.n, "work in GL(2n, F_q)");
  cmd->add_option("--cap-dlog", cfg.cap_dlog, "largest discrete-log table");
}

void add_common_flags(CLI::App* cmd, twjac::RunConfig& cfg) {
  cmd->add_option("--jobs", cfg.jobs, "worker threads (default: all)");
  cmd->add_option("--cap-enum", cfg.cap_enum, "largest group to enumerate");
  cmd->add_flag("--no-timing", cfg.no_timing, "report wall_ms as 0");
  cmd->add_option("--format", cfg.format, "table or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, twjac::Format>{{"table", twjac::Format::kTable},
                                               {"json", twjac::Format::kJson}},
          CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  twjac::RunConfig cfg;
  CLI::App app{"Twisted Jacquet modules of cuspidal representations of GL(2n, F_q)"};
  app.require_subcommand(1);

  auto* dim = app.add_subcommand("dim", "dimension per regular-character orbit");
  auto* main_cmd = app.add_subcommand("main", "compare Theta_{N,psiA} with the model on M_psiA");
  auto* lemmas = app.add_subcommand("lemmas", "counting, fast-path and model checks");
  auto* identity = app.add_subcommand("identity", "q-Pochhammer identity, both sides");
  auto* chr = app.add_subcommand("char", "one cuspidal character value");
  auto* bench = app.add_subcommand("bench", "serial against parallel kernels");

  for (auto* cmd : {dim, main_cmd, lemmas, chr, bench}) {
    add_field_flags(cmd, cfg);
    add_common_flags(cmd, cfg);
  }
  for (auto* cmd : {dim, main_cmd, lemmas}) {
    cmd->add_option("--A", cfg.a_choice, "e11, corner, zero or a matrix file");
    cmd->add_option("--theta", cfg.theta, "regular-character orbit (default: all)");
  }
  chr->add_option("--theta", cfg.theta, "exponent index k of theta")->required();
  chr->add_option("--matrix", cfg.matrix, "rows separated by ';', e.g. 1,0;0,1")->required();

  add_common_flags(identity, cfg);
  identity->add_option("--n", cfg.n, "n");
  identity->add_option("--a", cfg.a, "a >= 2n (default: 2n .. 2n+6)");
  identity->add_option("--q", cfg.q, "integer q >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  return twjac::run_command(name, cfg, std::cout, std::cerr);
}
