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

#include "eitt/easiness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "eitt/errors.hpp"

namespace eitt {

std::uint64_t Pairing::encode(std::uint64_t r, std::uint64_t s) {
  const std::uint64_t d = r + s;
  return d * (d + 1) / 2 + s;
}

std::pair<std::uint64_t, std::uint64_t> Pairing::decode(std::uint64_t n) {
  // Largest d with d(d+1)/2 <= n; the sqrt estimate is fixed up exactly.
  auto d = static_cast<std::uint64_t>(
      (std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (d * (d + 1) / 2 > n) --d;
  while ((d + 1) * (d + 2) / 2 <= n) ++d;
  const std::uint64_t s = n - d * (d + 1) / 2;
  return {d - s, s};
}

bool conservativity_check(const Theory& old_th, const Theory& new_th,
                          std::span<const Judgement> sample) {
  for (const auto& a : old_th.atoms())
    if (!new_th.has_atom(a))
      throw PreconditionError("constant '" + a +
                              "' of the old theory is missing from the new one");
  for (const auto& j : sample) {
    old_th.check_type(j.lhs);
    old_th.check_type(j.rhs);
  }
  for (const auto& j : sample)
    if (subtype(old_th, j.lhs, j.rhs) != subtype(new_th, j.lhs, j.rhs))
      return false;
  return true;
}

std::vector<Judgement> all_judgements(const TypeUniverse& u) {
  std::vector<Judgement> out;
  out.reserve(u.size() * u.size());
  for (Type a : u.members())
    for (Type b : u.members()) out.push_back({a, b});
  return out;
}

std::string fresh_atom(const Theory& th) {
  for (std::size_t k = 0;; ++k) {
    std::string name = "psi" + std::to_string(k);
    if (!th.has_atom(name)) return name;
  }
}

Theory dd_scheme(const PointedTheory& p) {
  p.theory.check_type(p.point);
  const std::string psi = fresh_atom(p.theory);
  Theory out = p.theory.with_atom(psi, Type::arrow(Type::atom(psi), p.point))
                   .renamed(p.theory.name() + "_" + psi);
  ValidationReport report = validate_theory(out);
  if (!report.ok()) throw ValidationError(std::move(report));
  return out;
}

FilterScheme dd_filter_scheme() { return {"dd", dd_scheme}; }

namespace {

TypeUniverse over(const TypeUniverse& u, const Theory& th) {
  return u.restricted_to(th.atom_set());
}

}  // namespace

bool simple_easiness_check(const Term& e, const Theory& old_th,
                           const Theory& new_th, Type z, const TypeUniverse& u,
                           std::size_t depth) {
  old_th.check_type(z);
  Model old_model(old_th, over(u, old_th), depth);
  Model new_model(new_th, over(u, new_th), depth);
  // The strongest C: meet of the old-universe types found for e.
  Filter old_e = old_model.interp(e, {}).restricted(old_model.universe());
  const Type lower = Type::meet(old_e.generator(), z);
  for (Type b : new_model.universe().members()) {
    bool lhs = new_model.inferencer().derivable({}, e, b, depth);
    bool rhs = subtype(new_th, lower, b);
    if (lhs != rhs) return false;
  }
  return true;
}

bool theorem4_check(const Term& e, const Theory& old_th, const Theory& new_th,
                    Type z, const TypeUniverse& u, std::size_t depth) {
  old_th.check_type(z);
  Model old_model(old_th, over(u, old_th), depth);
  Model new_model(new_th, over(u, new_th), depth);
  const Filter lifted(new_th, old_model.interp(e, {}).generator());
  const Filter expected = join(Filter(new_th, z), lifted);
  return new_model.interp(e, {}).equals(expected);
}

Filter predicate_filter(const Theory& th, const TypePredicate& p,
                        const TypeUniverse& u) {
  std::vector<Type> sat;
  for (Type a : u.members())
    if (p.holds(a)) sat.push_back(a);
  return Filter(th, Type::meet(sat));
}

Theory base_stage() { return dinf_theory().renamed("stage0"); }

std::vector<Type> witness_candidates(const Theory& stage,
                                     const std::optional<Theory>& previous,
                                     const TypePredicate& p,
                                     std::size_t width_bound) {
  const auto seed = stage.axiom_types();
  const TypeUniverse u = subterm_closure(seed, width_bound);
  auto is_new = [&](Type t) {
    if (!previous) return true;
    for (Type a : t.atoms())
      if (!previous->has_atom(a.name())) return true;
    return false;
  };
  std::vector<Type> out;
  auto consider = [&](Type t) {
    if (is_new(t) && p.holds(t)) out.push_back(t);
  };
  for (Type a : u.members()) consider(a);
  for (Type a : u.members())
    for (Type b : u.members())
      consider(Type::arrow(a, Type::arrow(b, Type::meet(a, b))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StagePlan run_construction(const Term& e, const FilterScheme& scheme,
                           const TypePredicate& p, std::size_t stages,
                           std::size_t width_bound) {
  (void)e;  // the scheme is specific to the term it makes easy
  if (stages < 1) throw PreconditionError("a plan needs at least one stage");
  if (width_bound < 1) throw PreconditionError("width_bound must be >= 1");
  StagePlan plan;
  plan.predicate = p;
  plan.width_bound = width_bound;
  plan.stages.push_back(base_stage());

  std::map<std::uint64_t, std::vector<Type>> candidates;
  for (std::size_t n = 0; n + 1 < stages; ++n) {
    const auto [r, s] = Pairing::decode(n);
    auto it = candidates.find(r);
    if (it == candidates.end()) {
      std::optional<Theory> prev;
      if (r > 0) prev = plan.stages[r - 1];
      it = candidates
               .emplace(r, witness_candidates(plan.stages[r], prev, p,
                                              width_bound))
               .first;
    }
    if (s >= it->second.size())
      throw ResourceError("enumeration exhausted: stage " + std::to_string(r) +
                          " has " + std::to_string(it->second.size()) +
                          " candidate witnesses, index " + std::to_string(s) +
                          " requested (raise the width bound)");
    const Type w = it->second[s];
    Theory next = scheme.extend({plan.stages[n], w})
                      .renamed("stage" + std::to_string(n + 1));
    plan.witnesses.push_back({n, r, s, w});
    plan.stages.push_back(std::move(next));
  }
  return plan;
}

TypeUniverse plan_universe(const StagePlan& plan, std::span<const Type> extra) {
  std::vector<Type> seed = plan.final_stage().axiom_types();
  seed.insert(seed.end(), extra.begin(), extra.end());
  return subterm_closure(seed, plan.width_bound);
}

std::vector<StageCheck> stage_interpretation_report(const StagePlan& plan,
                                                    const Term& e,
                                                    const TypeUniverse& u,
                                                    std::size_t depth) {
  std::vector<StageCheck> out;
  std::vector<Type> prefix;
  for (std::size_t n = 0; n < plan.stages.size(); ++n) {
    const Theory& th = plan.stages[n];
    Model m(th, over(u, th), depth);
    const Type got = m.interp(e, {}).generator();
    const Type expected = Type::meet(prefix);
    const bool ok = equiv(th, got, expected);
    out.push_back({n, ok,
                   "[[" + e.str() + "]] = up(" + got.str() + "), expected up(" +
                       expected.str() + ")"});
    if (n < plan.witnesses.size()) prefix.push_back(plan.witnesses[n].type);
  }
  return out;
}

bool stage_interpretation_check(const StagePlan& plan, const Term& e,
                                const TypeUniverse& u, std::size_t depth) {
  for (const auto& c : stage_interpretation_report(plan, e, u, depth))
    if (!c.pass) return false;
  return true;
}

Type separating_type() {
  const Type w = Type::atom("w");
  const Type ww = Type::arrow(w, w);
  return Type::arrow(ww, ww);
}

std::vector<StageCheck> nontriviality_report(const StagePlan& plan,
                                             const TypeUniverse& u,
                                             std::size_t depth) {
  const Type d = separating_type();
  if (!u.contains(d))
    throw PreconditionError("universe must contain " + d.str());
  const Type w = Type::atom("w");
  std::vector<StageCheck> out;
  for (std::size_t n = 0; n < plan.stages.size(); ++n) {
    const Theory& th = plan.stages[n];
    Model m(th, over(u, th), depth);
    const bool in_i = m.interp(combinators::i(), {}).member(d);
    const bool in_k = m.interp(combinators::k(), {}).member(d);
    const bool collapse = subtype(th, Type::arrow(w, w), w);
    std::ostringstream detail;
    detail << "D in [[i]]: " << (in_i ? "yes" : "no")
           << ", D in [[k]]: " << (in_k ? "yes" : "no")
           << ", w -> w <= w: " << (collapse ? "yes" : "no");
    out.push_back({n, in_i && !in_k && !collapse, detail.str()});
  }
  return out;
}

bool nontriviality_check(const StagePlan& plan, const TypeUniverse& u,
                         std::size_t depth) {
  for (const auto& c : nontriviality_report(plan, u, depth))
    if (!c.pass) return false;
  return true;
}

std::string plan_manifest(const StagePlan& plan) {
  std::ostringstream os;
  os << "# predicate " << plan.predicate.name << ", width "
     << plan.width_bound << ", " << plan.stages.size() << " stages\n"
     << "# n r s witness\n";
  for (const auto& w : plan.witnesses)
    os << w.n << ' ' << w.r << ' ' << w.s << ' ' << w.type.str() << '\n';
  return os.str();
}

void save_plan(const StagePlan& plan, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (std::size_t n = 0; n < plan.stages.size(); ++n)
    save_theory_file(plan.stages[n],
                     (fs::path(dir) / ("stage" + std::to_string(n) + ".eitt"))
                         .string());
  std::ofstream out(fs::path(dir) / "manifest.txt");
  if (!out) throw Error("cannot write manifest in '" + dir + "'");
  out << plan_manifest(plan);
}

}  // namespace eitt
