//  Copyright 2026 The eitt Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "eitt/cli.hpp"
#include "eitt/errors.hpp"
#include "eitt/jtheory.hpp"

#ifndef EITT_TEST_DATA
#error "EITT_TEST_DATA must name the tests/data directory"
#endif

namespace eitt {
namespace {

using namespace combinators;

Type w() { return Type::atom("w"); }
Type top() { return Type::top(); }
Type arr(Type a, Type b) { return Type::arrow(a, b); }

const std::string kD0 = std::string(EITT_TEST_DATA) + "/d0.eitt";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "eitt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(JoinPredicate, Examples) {
  const Type tw = arr(top(), w());
  EXPECT_TRUE(join_predicate(arr(w(), arr(tw, Type::meet(w(), tw)))));
  EXPECT_TRUE(join_predicate(arr(top(), arr(top(), top()))));
  EXPECT_FALSE(join_predicate(arr(w(), w())));
  EXPECT_FALSE(join_predicate(arr(w(), arr(tw, w()))));
  EXPECT_FALSE(join_predicate(w()));
}

TEST(JEquations, Shape) {
  auto eqs = j_equations();
  ASSERT_EQ(eqs.size(), 3u);
  EXPECT_EQ(eqs[0].name, "idempotence");
  EXPECT_EQ(eqs[0].lhs.str(), "(\\x.x x) (\\x.x x) x x");
  EXPECT_EQ(eqs[0].rhs, Term::var("x"));
  EXPECT_EQ(eqs[1].rhs.str(), "(\\x.x x) (\\x.x x) y x");
  EXPECT_EQ(eqs[2].lhs.str(), "(\\x.x x) (\\x.x x) x ((\\x.x x) (\\x.x x) y z)");
}

// At the final stage the equations reduce to the join laws whenever
// [[DD]] acts as a join on the generators involved.
TEST(JEquations, HoldWhereDDActsAsJoin) {
  StagePlan p = run_construction(delta_delta(), dd_filter_scheme(),
                                 join_type_predicate(), 5, 2);
  const TypeUniverse u = plan_universe(p, std::vector<Type>{separating_type()});
  Model m(p.final_stage(), u);
  Env env;
  env.bind("x", m.filter(w())).bind("y", m.filter(w())).bind("z", m.filter(w()));
  for (const auto& eq : j_equations())
    EXPECT_TRUE(m.interp(eq.lhs, env).equals(m.interp(eq.rhs, env))) << eq.name;
  const Filter dd = m.interp(delta_delta(), {});
  EXPECT_TRUE(apply(apply(dd, m.filter(w())), m.filter(w())).equals(m.filter(w())));
}

TEST(JoinLaws, SemilatticeOnGenerators) {
  StagePlan p = run_construction(delta_delta(), dd_filter_scheme(),
                                 join_type_predicate(), 3, 2);
  const Theory& th = p.final_stage();
  const TypeUniverse u = plan_universe(p, {});
  for (Type a : u.members())
    for (Type b : u.members()) {
      EXPECT_TRUE(equiv(th, Type::meet(a, a), a));
      EXPECT_TRUE(equiv(th, Type::meet(a, b), Type::meet(b, a)));
      for (Type c : {top(), w()})
        EXPECT_TRUE(equiv(th, Type::meet(a, Type::meet(b, c)),
                          Type::meet(Type::meet(a, b), c)));
    }
}

TEST(VerifyJ, ReportIsDeterministic) {
  RunConfig cfg;
  cfg.stages = 2;
  cfg.samples = 6;
  cfg.seed = 7;
  const std::string a = verify_j(cfg).str(), b = verify_j(cfg).str();
  EXPECT_EQ(a, b);
  cfg.seed = 8;
  EXPECT_NE(verify_j(cfg).str(), a);
}

TEST(VerifyJ, ReportLines) {
  RunConfig cfg;
  cfg.stages = 1;
  cfg.samples = 2;
  JReport r = verify_j(cfg);
  const std::string s = r.str();
  EXPECT_NE(s.find("WITNESS 0 <0,0> Top -> Top -> Top"), std::string::npos) << s;
  EXPECT_NE(s.find("STAGE 1 "), std::string::npos);
  EXPECT_NE(s.find("J idempotence #1 "), std::string::npos);
  EXPECT_NE(s.find("NONTRIVIAL 1 "), std::string::npos);
  EXPECT_NE(s.find("APPLY "), std::string::npos);
  EXPECT_EQ(r.checks, 2u + 6u + 1u + 2u);
  EXPECT_EQ(r.consistent(), r.failures == 0);
}

TEST(VerifyJ, RejectsZeroCounts) {
  RunConfig cfg;
  cfg.samples = 0;
  EXPECT_THROW(verify_j(cfg), PreconditionError);
}

TEST(Cli, SubPrintsTrue) {
  CliRun r = run({"sub", kD0, "w", "Top -> w"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "TRUE\n");
  CliRun f = run({"sub", kD0, "w -> w", "w"});
  EXPECT_EQ(f.code, kExitFail);
  EXPECT_EQ(f.out, "FALSE\n");
}

TEST(Cli, TypecheckIdentity) {
  CliRun r = run({"typecheck", kD0, "\\x.x", "(w->w)->(w->w)"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "DERIVABLE\n");
  CliRun k = run({"typecheck", kD0, "\\x y.x", "(w->w)->(w->w)"});
  EXPECT_EQ(k.code, kExitFail);
  CliRun c = run({"typecheck", kD0, "x", "w", "--basis", "x:w & (w->w)",
               "--certificate"});
  EXPECT_EQ(c.code, kExitPass);
  EXPECT_NE(c.out.find("[<=]"), std::string::npos) << c.out;
}

TEST(Cli, TheoryCheckAndInterp) {
  CliRun r = run({"theory", "check", kD0});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "VALID dinf\n");
  CliRun i = run({"interp", kD0, "x", "--env", "x:w"});
  EXPECT_EQ(i.out, "up(w)\n");
  CliRun dd = run({"interp", kD0, "(\\x.x x)(\\x.x x)"});
  EXPECT_EQ(dd.out, "up(Top)\n");
}

TEST(Cli, ExtendAndConstruct) {
  const auto dir = std::filesystem::temp_directory_path() / "eitt_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string ext = (dir / "d1.eitt").string();
  CliRun e = run({"extend", kD0, "--point", "w", "--out", ext});
  EXPECT_EQ(e.code, kExitPass);
  EXPECT_NE(e.out.find("psi0 ~ psi0 -> w;"), std::string::npos);
  EXPECT_EQ(run({"sub", ext, "psi0", "psi0 -> w"}).code, kExitPass);
  CliRun c = run({"construct", "--stages", "2", "--predicate", "join", "--out",
               (dir / "plan").string()});
  EXPECT_EQ(c.code, kExitPass);
  EXPECT_TRUE(std::filesystem::exists(dir / "plan" / "stage2.eitt"));
  EXPECT_NE(c.out.find("0 0 0 Top -> Top -> Top"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, LawsAreReproducible) {
  CliRun a = run({"laws", kD0, "--samples", "10", "--seed", "3"});
  CliRun b = run({"laws", kD0, "--samples", "10", "--seed", "3"});
  EXPECT_EQ(a.code, kExitPass) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("LAW3 "), std::string::npos);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"sub", kD0}).code, kExitUsage);
  EXPECT_EQ(run({"sub", kD0, "q", "w"}).code, kExitUsage);
  EXPECT_EQ(run({"sub", "/nonexistent.eitt", "w", "w"}).code, kExitUsage);
  EXPECT_EQ(run({"typecheck", kD0, "\\x.", "w"}).code, kExitUsage);
  EXPECT_EQ(run({"construct", "--predicate", "other"}).code, kExitUsage);
  CliRun h = run({"--help"});
  EXPECT_EQ(h.code, kExitPass);
  EXPECT_NE(h.out.find("verify-j"), std::string::npos);
}

}  // namespace
}  // namespace eitt
