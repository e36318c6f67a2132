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

#include "eitt/jtheory.hpp"

#include <random>
#include <sstream>

#include "eitt/errors.hpp"

namespace eitt {

bool join_predicate(Type c) {
  if (!c.is_arrow() || !c.codomain().is_arrow()) return false;
  const Type a = c.domain();
  const Type b = c.codomain().domain();
  return c.codomain().codomain() == Type::meet(a, b);
}

TypePredicate join_type_predicate() { return {"join", join_predicate}; }

std::vector<JEquation> j_equations() {
  auto dd = [](Term a, Term b) {
    return Term::app(Term::app(combinators::delta_delta(), a), b);
  };
  const Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  return {
      {"idempotence", dd(x, x), x},
      {"commutativity", dd(x, y), dd(y, x)},
      {"associativity", dd(x, dd(y, z)), dd(dd(x, y), z)},
  };
}

void RunConfig::validate() const {
  if (stages < 1 || width_bound < 1 || depth < 1 || samples < 1)
    throw PreconditionError(
        "stages, width, depth and samples must all be >= 1");
}

std::string JReport::str() const {
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  if (consistent()) {
    out += "CONSISTENT (evidence)\n";
  } else {
    out += "NOT ESTABLISHED (" + std::to_string(failures) + " of " +
           std::to_string(checks) + " checks failed)\n";
  }
  return out;
}

namespace {

std::string compact(Type t) {
  std::string s = t.str();
  std::erase(s, ' ');
  return s;
}

// Failing universe pairs listed individually before the summary line.
constexpr std::size_t kListedApplyFailures = 10;

}  // namespace

JReport verify_j(const RunConfig& cfg) {
  cfg.validate();
  const Term dd = combinators::delta_delta();
  const StagePlan plan = run_construction(dd, dd_filter_scheme(),
                                          join_type_predicate(),
                                          cfg.stages + 1, cfg.width_bound);
  std::vector<Type> extra = cfg.universe_seed;
  extra.push_back(separating_type());
  const TypeUniverse u = plan_universe(plan, extra);
  const Theory& th = plan.final_stage();
  Model m(th, u, cfg.depth);

  JReport rep;
  auto check = [&rep](bool ok, std::string line, const std::string& why) {
    ++rep.checks;
    if (!ok) ++rep.failures;
    line += ok ? " PASS" : " FAIL";
    if (!ok && !why.empty()) line += "  # " + why;
    rep.lines.push_back(std::move(line));
  };

  {
    std::ostringstream h;
    h << "# final " << th.name() << ", width " << cfg.width_bound
      << ", depth " << cfg.depth << ", samples " << cfg.samples << ", seed "
      << cfg.seed << ", universe " << u.size() << " types";
    rep.lines.push_back(h.str());
  }
  for (const auto& w : plan.witnesses)
    rep.lines.push_back("WITNESS " + std::to_string(w.n) + " <" +
                        std::to_string(w.r) + "," + std::to_string(w.s) +
                        "> " + w.type.str());
  for (const auto& c : stage_interpretation_report(plan, dd, u, cfg.depth))
    check(c.pass, "STAGE " + std::to_string(c.stage) + " " + c.detail, "");

  std::mt19937_64 rng(cfg.seed);
  const auto eqs = j_equations();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Env env;
    for (const char* v : {"x", "y", "z"})
      env.bind(v, m.filter(u[rng() % u.size()]));
    for (const auto& eq : eqs) {
      const Filter lhs = m.interp(eq.lhs, env), rhs = m.interp(eq.rhs, env);
      check(lhs.equals(rhs),
            "J " + eq.name + " #" + std::to_string(i) + " " + env.str(),
            lhs.str() + " vs " + rhs.str());
    }
  }

  const Filter ddf = m.interp(dd, {});
  std::size_t pairs = 0, bad = 0;
  for (Type a : u.members()) {
    const Filter fa = apply(ddf, m.filter(a));
    for (Type b : u.members()) {
      ++pairs;
      const Filter got = apply(fa, m.filter(b));
      const Filter want = m.filter(Type::meet(a, b));
      if (got.equals(want)) continue;
      if (++bad <= kListedApplyFailures)
        rep.lines.push_back("APPLY-FAIL A=" + compact(a) + " B=" + compact(b) +
                            " got " + got.str() + " want " + want.str());
    }
  }
  check(bad == 0,
        "APPLY [[DD]].up(A).up(B) = up(A&B) on " + std::to_string(pairs) +
            " pairs",
        std::to_string(bad) + " pairs differ");

  for (const auto& c : nontriviality_report(plan, u, cfg.depth))
    check(c.pass, "NONTRIVIAL " + std::to_string(c.stage) + " " + c.detail, "");
  return rep;
}

}  // namespace eitt
