/*
   Copyright 2026 The ramlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "ramlab/cli.hpp"

using namespace ramlab;

namespace {

struct Outcome {
  int rc;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = run_command(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DecomposeJson) {
  Outcome r = run({"decompose", "--field", "x^2+1", "--prime", "5"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  ASSERT_EQ(j.at("primes").size(), 2u);
  for (const auto& q : j.at("primes")) {
    EXPECT_EQ(q.at("e"), 1);
    EXPECT_EQ(q.at("f"), 1);
  }
  EXPECT_EQ(j.at("sum_ef"), 2);
}

TEST(Cli, DecomposeTextAndCoefficientList) {
  Outcome r = run({"decompose", "--field", "[-8,-2,-1,1]", "--prime", "2", "--format", "text"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_NE(r.out.find("sum e*f = 3"), std::string::npos);
  Outcome g = run({"--format", "text", "decompose", "--field", "x^3-x^2-2*x-8", "--prime", "2"});
  EXPECT_EQ(g.out, r.out);
}

TEST(Cli, Compositum) {
  Outcome r = run({"compositum", "--f1", "x^3-3", "--f2", "x^3-3"});
  ASSERT_EQ(r.rc, kExitOk);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j.at("composita").size(), 2u);
  EXPECT_EQ(j.at("composita").at(0).at("degree"), 3);
  EXPECT_EQ(j.at("composita").at(1).at("degree"), 6);
}

TEST(Cli, CheckCubeRootOfThree) {
  Outcome r = run({"check", "--f1", "x^2+x+1", "--f2", "x^3-3", "--prime", "3"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  const Json& q = j.at("reports").at(0).at("primes").at(0);
  EXPECT_EQ(q.at("e_q"), 6);
  EXPECT_EQ(q.at("lcm"), 6);
  EXPECT_EQ(q.at("verdict_theorem"), "holds");
  EXPECT_EQ(j.at("cross_validation").at("agree"), true);
  EXPECT_EQ(j.at("ok"), true);
  // every report re-parses to the same record
  auto reps = check_instance(Instance{parse_poly("x^2+x+1"), parse_poly("x^3-3"), 3, std::nullopt});
  EXPECT_EQ(report_from_json(j.at("reports").at(0)), reps[0]);
}

TEST(Cli, CheckText) {
  Outcome r = run({"check", "--f1", "x^3-3", "--f2", "x^3-3", "--prime", "3", "--format", "text", "--compositum", "1"});
  ASSERT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_NE(r.out.find("compositum 2/2"), std::string::npos);
  EXPECT_NE(r.out.find("not-applicable"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).rc, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).rc, kExitUsage);
  EXPECT_EQ(run({"decompose", "--field", "x^^2", "--prime", "5"}).rc, kExitUsage);
  EXPECT_EQ(run({"decompose", "--field", "x^2-1", "--prime", "5"}).rc, kExitUsage);
  EXPECT_EQ(run({"decompose", "--field", "x^2+1", "--prime", "6"}).rc, kExitUsage);
  EXPECT_EQ(run({"decompose", "--field", "x^2+1"}).rc, kExitUsage);
  Outcome cap = run({"decompose", "--field", "x^2+1", "--prime", "2003"});
  EXPECT_EQ(cap.rc, kExitCap);
  EXPECT_NE(cap.err.find("cap exceeded"), std::string::npos);
  EXPECT_EQ(run({"check", "--f1", "x^4-2", "--f2", "x^4-3", "--prime", "2"}).rc, kExitCap);
  EXPECT_EQ(run({"--prime-bound", "3000", "decompose", "--field", "x^2+1", "--prime", "2003"}).rc, kExitOk);
  EXPECT_EQ(run({"--help"}).rc, kExitOk);
}

TEST(Cli, EnvironmentClosureCap) {
  setenv("RAMLAB_MAX_DEGREE", "4", 1);
  Outcome r = run({"check", "--f1", "x^2+x+1", "--f2", "x^3-3", "--prime", "3"});
  Outcome flag = run({"--max-closure-degree", "24", "check", "--f1", "x^2+x+1", "--f2", "x^3-3", "--prime", "3"});
  unsetenv("RAMLAB_MAX_DEGREE");
  ASSERT_EQ(r.rc, kExitOk);
  EXPECT_EQ(Json::parse(r.out).at("reports").at(0).at("pathways").at("B").at("status"), "skipped");
  EXPECT_EQ(Json::parse(flag.out).at("reports").at(0).at("pathways").at("B").at("status"), "validated");
}

TEST(Cli, FuzzIsReproducible) {
  Outcome a = run({"fuzz", "--seed", "7", "--cases", "12"});
  Outcome b = run({"fuzz", "--seed", "7", "--cases", "12"});
  ASSERT_EQ(a.rc, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(j.at("instances").size(), 12u);
  EXPECT_EQ(j.at("summary").at("eq1_false"), 0);
  EXPECT_EQ(j.at("summary").at("reports_failed"), 0);
  Outcome c = run({"fuzz", "--seed", "8", "--cases", "12"});
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(run({"fuzz", "--cases", "3"}).rc, kExitUsage);
}
