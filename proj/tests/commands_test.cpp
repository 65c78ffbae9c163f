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

#include "twjac/commands.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

namespace twjac {
namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const char* bin = std::getenv("TWJAC_CLI");
  if (bin == nullptr) ADD_FAILURE() << "TWJAC_CLI is not set";
  const std::string cmd = std::string(bin ? bin : "twjac") + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json json_of(const CliRun& r) { return Json::parse(r.out); }

TEST(Cli, DimPerOrbit) {
  for (auto [args, orbits, dim] : {std::tuple{"--p 2 --n 2", 3, "1"},
                                   {"--p 3 --n 2", 18, "4"},
                                   {"--p 2 --n 3", 9, "9"},
                                   {"--p 2 --n 1", 1, "1"}}) {
    const CliRun r = cli(std::string("dim ") + args + " --format json");
    ASSERT_EQ(r.code, 0) << args;
    const Json j = json_of(r);
    ASSERT_EQ(j.size(), static_cast<std::size_t>(orbits));
    for (const auto& rec : j) {
      EXPECT_EQ(rec["id"], "thm-3.7");
      EXPECT_EQ(rec["verdict"], "pass");
      EXPECT_EQ(rec["expected"], dim);
      EXPECT_EQ(rec["computed"]["direct"], dim);
      EXPECT_EQ(rec["computed"]["stratified"], dim);
    }
  }
}

TEST(Cli, DimWithZeroAndWideTwists) {
  CliRun r = cli("dim --p 2 --n 2 --A zero --format json");
  ASSERT_EQ(r.code, 0);
  for (const auto& rec : json_of(r)) EXPECT_EQ(rec["computed"]["direct"], "0");
  const auto path = std::filesystem::temp_directory_path() / "twjac_identity_a.txt";
  std::ofstream(path) << "1,0;0,1\n";
  r = cli("dim --p 2 --n 2 --A " + path.string() + " --format json");
  ASSERT_EQ(r.code, 0);
  for (const auto& rec : json_of(r)) {
    EXPECT_EQ(rec["id"], "outside-scope");
    EXPECT_EQ(rec["verdict"], "info");
  }
  std::filesystem::remove(path);
}

TEST(Cli, MainTheorem) {
  CliRun r = cli("main --p 2 --n 2 --format json");
  ASSERT_EQ(r.code, 0);
  const Json j = json_of(r);
  ASSERT_EQ(j.size(), 3u);
  for (const auto& rec : j) {
    EXPECT_EQ(rec["computed"]["residuals"], "all zero");
    ASSERT_EQ(rec["computed"]["table"].size(), 4u);
    for (const auto& row : rec["computed"]["table"]) {
      EXPECT_TRUE(row["residual"]["terms"].empty());
    }
  }
  EXPECT_EQ(cli("main --p 3 --n 2 --theta 0").code, 0);
  r = cli("main --p 2 --n 1 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)[0]["computed"]["flag"], "degenerate-n1");
}

TEST(Cli, Lemmas) {
  const CliRun r = cli("lemmas --p 2 --n 2 --format json");
  ASSERT_EQ(r.code, 0);
  std::set<std::string> ids;
  for (const auto& rec : json_of(r)) {
    ids.insert(rec["id"].get<std::string>());
    EXPECT_NE(rec["verdict"], "fail") << rec.dump();
  }
  for (const char* id : {"lem-3.1", "lem-3.2", "lem-3.3", "lem-3.4", "lem-3.5", "lem-3.6",
                         "lem-4.1", "lem-4.3", "lem-4.5", "lem-4.7", "lem-4.9", "lem-4.10",
                         "lem-4.11", "thm-2.3", "rem-3.8"}) {
    EXPECT_EQ(ids.count(id), 1u) << id;
  }
}

TEST(Cli, Identity) {
  CliRun r = cli("identity --n 2 --a 5 --q 7 --format json");
  ASSERT_EQ(r.code, 0);
  const Json j = json_of(r);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["expected"], j[0]["computed"]);
  r = cli("identity --n 3 --q 4 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r).size(), 7u);
  EXPECT_EQ(cli("identity --n 3 --a 5").code, 2);
}

TEST(Cli, Char) {
  CliRun r = cli("char --p 2 --n 1 --theta 1 --matrix \"0,1;1,1\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 1\n"), std::string::npos) << r.out;
  r = cli("char --p 2 --n 1 --theta 1 --matrix \"0,1;1,1\" --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)[0]["computed"]["integer"], "1");
  r = cli("char --p 3 --n 1 --theta 1 --matrix \"0,1;1,1\" --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(json_of(r)[0]["computed"].contains("integer"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("dim --p 4 --n 2").code, 2);
  EXPECT_EQ(cli("main --p 2 --n 2 --A e11").code, 2);
  EXPECT_EQ(cli("main --p 2 --n 2 --theta 7").code, 2);
  EXPECT_EQ(cli("char --p 2 --n 1 --theta 1 --matrix \"1,2;0,1\"").code, 2);
  EXPECT_EQ(cli("char --p 2 --n 1 --theta 1 --matrix \"1,1;1,1\"").code, 2);
  EXPECT_EQ(cli("char --p 3 --n 1 --theta 4 --matrix \"1,0;0,1\"").code, 2);
  EXPECT_EQ(cli("dim --p 2 --n 2 --A /nonexistent/file").code, 2);
  EXPECT_EQ(cli("dim --p 3 --n 3 --cap-dlog 100").code, 2);
  EXPECT_EQ(cli("dim --bogus").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, DeterministicAcrossWorkerCounts) {
  const CliRun a = cli("main --p 2 --n 2 --format json --no-timing --jobs 1");
  const CliRun b = cli("main --p 2 --n 2 --format json --no-timing --jobs 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliRun c = cli("lemmas --p 3 --n 1 --format json --no-timing --jobs 1");
  const CliRun d = cli("lemmas --p 3 --n 1 --format json --no-timing --jobs 3");
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, Bench) {
  const CliRun r = cli("bench --p 2 --n 2 --format json");
  ASSERT_EQ(r.code, 0);
  for (const auto& rec : json_of(r)) EXPECT_EQ(rec["computed"]["identical"], true);
}

TEST(Report, CyclotomicJson) {
  const Json j = to_json(CycNum::zeta(3, 1) + CycNum::zeta(3, 2));
  EXPECT_EQ(j["L"], 3);
  EXPECT_EQ(j["rational"], "-1");
  EXPECT_EQ(j["terms"]["0"], "-1");
  const Json z = to_json(CycNum::zeta(4, 1));
  EXPECT_EQ(z["terms"]["1"], "1");
  EXPECT_FALSE(z.contains("rational"));
}

TEST(Report, ExitCodeFollowsVerdicts) {
  Report r;
  r.add({"a", "", Json::object(), "1", "1", Verdict::kPass, 0});
  r.add({"b", "", Json::object(), nullptr, "x", Verdict::kInfo, 0});
  EXPECT_TRUE(r.all_pass());
  r.add({"c", "", Json::object(), "1", "2", Verdict::kFail, 0});
  EXPECT_FALSE(r.all_pass());
}

}  // namespace
}  // namespace twjac
