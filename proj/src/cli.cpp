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

#include "eitt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eitt/assignment.hpp"
#include "eitt/easiness.hpp"
#include "eitt/errors.hpp"
#include "eitt/filter_model.hpp"
#include "eitt/jtheory.hpp"
#include "eitt/sampling.hpp"
#include "eitt/theory.hpp"

namespace eitt {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "x:A, y:B" -> bindings; an empty string is the empty basis.
std::map<std::string, Type> parse_bindings(const Theory& th,
                                           const std::string& text) {
  std::map<std::string, Type> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error("binding '" + item + "' is not of the form x:Type");
    std::string x = item.substr(0, colon);
    std::erase_if(x, [](char c) { return c == ' ' || c == '\t'; });
    if (x.empty()) throw Error("binding '" + item + "' has no variable");
    if (!out.emplace(x, th.parse(item.substr(colon + 1))).second)
      throw Error("variable '" + x + "' bound twice");
  }
  return out;
}

// Axiom subterms, the extra types, closed to `width`, plus every type up to
// `type_size` nodes.
TypeUniverse working_universe(const Theory& th, std::vector<Type> extra,
                              std::size_t width, std::size_t type_size) {
  std::vector<Type> seed = th.axiom_types();
  seed.insert(seed.end(), extra.begin(), extra.end());
  TypeUniverse u = subterm_closure(seed, width);
  if (type_size > 0) u = u.merged(enumerate_types(th.atom_set(), type_size));
  return u;
}

struct Common {
  std::size_t depth = kDefaultDepth;
  std::size_t width = 2;
  std::size_t type_size = 0;
  std::uint64_t seed = 1;
};

int cmd_theory_check(const std::string& file, std::ostream& out) {
  const Theory th = parse_theory(read_file(file));
  const ValidationReport rep = validate_theory(th);
  if (rep.ok()) {
    out << "VALID " << th.name() << '\n';
    return kExitPass;
  }
  out << "INVALID " << th.name() << '\n' << rep.str();
  return kExitFail;
}

int cmd_sub(const std::string& file, const std::string& a,
            const std::string& b, std::ostream& out) {
  const Theory th = load_theory_file(file);
  const bool r = subtype(th, th.parse(a), th.parse(b));
  out << (r ? "TRUE" : "FALSE") << '\n';
  return r ? kExitPass : kExitFail;
}

int cmd_typecheck(const std::string& file, const std::string& term,
                  const std::string& type, const std::string& basis_text,
                  bool certificate, const Common& c, std::ostream& out) {
  const Theory th = load_theory_file(file);
  const Term t = parse_term(term);
  const Type a = th.parse(type);
  const Basis basis(parse_bindings(th, basis_text));
  std::vector<Type> extra{a};
  for (const auto& [x, b] : basis.bindings()) extra.push_back(b);
  Inferencer inf(th, working_universe(th, extra, c.width, c.type_size));
  if (!certificate) {
    const bool ok = inf.derivable(basis, t, a, c.depth);
    out << (ok ? "DERIVABLE" : "NOT DERIVABLE") << '\n';
    return ok ? kExitPass : kExitFail;
  }
  const auto d = inf.certify(basis, t, a, c.depth);
  if (!d) {
    out << "NOT DERIVABLE\n";
    return kExitFail;
  }
  const CheckResult check = check_derivation(th, *d);
  out << "DERIVABLE\n" << serialize(*d);
  if (!check) {
    out << "certificate rejected at " << check.node << ": " << check.message
        << '\n';
    return kExitFail;
  }
  return kExitPass;
}

int cmd_interp(const std::string& file, const std::string& term,
               const std::string& env_text, const Common& c,
               std::ostream& out) {
  const Theory th = load_theory_file(file);
  const Term t = parse_term(term);
  const auto bindings = parse_bindings(th, env_text);
  std::vector<Type> extra;
  for (const auto& [x, b] : bindings) extra.push_back(b);
  Model m(th, working_universe(th, extra, c.width, c.type_size), c.depth);
  Env env;
  for (const auto& [x, b] : bindings) env.bind(x, m.filter(b));
  out << m.interp(t, env).str() << '\n';
  return kExitPass;
}

int cmd_extend(const std::string& file, const std::string& point,
               const std::string& out_file, std::ostream& out) {
  const Theory th = load_theory_file(file);
  const Theory ext = dd_scheme({th, th.parse(point)});
  out << print_theory(ext);
  if (!out_file.empty()) save_theory_file(ext, out_file);
  return kExitPass;
}

int cmd_construct(std::size_t stages, const std::string& out_dir,
                  const Common& c, std::ostream& out) {
  const StagePlan plan =
      run_construction(combinators::delta_delta(), dd_filter_scheme(),
                       join_type_predicate(), stages + 1, c.width);
  out << plan_manifest(plan);
  if (!out_dir.empty()) save_plan(plan, out_dir);
  return kExitPass;
}

int cmd_verify_j(std::size_t stages, std::size_t samples, const Common& c,
                 std::ostream& out) {
  RunConfig cfg;
  cfg.stages = stages;
  cfg.samples = samples;
  cfg.seed = c.seed;
  cfg.width_bound = c.width;
  cfg.depth = c.depth;
  const JReport rep = verify_j(cfg);
  out << rep.str();
  return rep.consistent() ? kExitPass : kExitFail;
}

int cmd_laws(const std::string& file, std::size_t samples,
             std::size_t term_size, std::size_t probes, const Common& c,
             std::ostream& out) {
  const Theory th = load_theory_file(file);
  Model m(th, working_universe(th, {}, c.width, c.type_size), c.depth);
  std::mt19937_64 rng(c.seed);
  const auto& u = m.universe();
  std::vector<std::pair<Term, Env>> cases;
  for (std::size_t i = 0; i < samples; ++i) {
    Term t = random_term({"x", "y"}, term_size, rng);
    Env env;
    for (const auto& x : t.free_vars()) env.bind(x, m.filter(u[rng() % u.size()]));
    cases.emplace_back(std::move(t), std::move(env));
  }
  LawsOptions opt;
  opt.depth = c.depth;
  opt.probes = probes;
  opt.seed = c.seed;
  const LawsReport rep = model_laws_suite(m, cases, opt);
  out << rep.str() << "# " << rep.results.size() << " checks, "
      << rep.failures() << " failed\n";
  return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"eitt: easy intersection type theories and filter models",
               "eitt"};
  app.require_subcommand(1);

  Common c;
  auto add_depth = [&c](CLI::App* s) {
    s->add_option("--depth", c.depth, "inference depth bound")
        ->check(CLI::PositiveNumber);
  };
  auto add_width = [&c](CLI::App* s) {
    s->add_option("--width", c.width, "max conjuncts when closing the universe")
        ->check(CLI::PositiveNumber);
  };
  std::size_t interp_type_size = 0, laws_type_size = 5;
  auto add_type_size = [](CLI::App* s, std::size_t& v) {
    s->add_option("--type-size", v,
                  "also include every type of at most this many nodes");
  };

  std::string file, a, b, term, type, basis, env, point, out_path;
  std::size_t stages = 4, samples = 50, term_size = 7, probes = 4;
  bool certificate = false;

  auto* theory = app.add_subcommand("theory", "theory files");
  theory->require_subcommand(1);
  auto* check = theory->add_subcommand("check", "parse and validate a theory");
  check->add_option("file", file)->required();

  auto* sub = app.add_subcommand("sub", "decide A <= B");
  sub->add_option("file", file)->required();
  sub->add_option("A", a)->required();
  sub->add_option("B", b)->required();

  auto* tc = app.add_subcommand("typecheck", "decide |- term : type");
  tc->add_option("file", file)->required();
  tc->add_option("term", term)->required();
  tc->add_option("type", type)->required();
  tc->add_option("--basis", basis, "x:A, y:B");
  tc->add_flag("--certificate", certificate, "print a checked derivation");
  add_depth(tc);
  add_width(tc);

  auto* ip = app.add_subcommand("interp", "generator of [[term]]");
  ip->add_option("file", file)->required();
  ip->add_option("term", term)->required();
  ip->add_option("--env", env, "x:A, y:B (principal filters)");
  add_depth(ip);
  add_width(ip);
  add_type_size(ip, interp_type_size);

  auto* ex = app.add_subcommand("extend", "apply the DD scheme at a point");
  ex->add_option("file", file)->required();
  ex->add_option("--point", point, "the point Z")->required();
  ex->add_option("--out", out_path, "write the extension here");

  auto* co = app.add_subcommand("construct", "stagewise construction");
  co->add_option("--stages", stages, "index of the final stage")
      ->check(CLI::PositiveNumber);
  std::string predicate = "join";
  co->add_option("--predicate", predicate)->check(CLI::IsMember({"join"}));
  co->add_option("--out", out_path, "directory for stage files and manifest");
  add_width(co);

  auto* vj = app.add_subcommand("verify-j", "consistency evidence for J");
  vj->add_option("--stages", stages, "index of the final stage")
      ->check(CLI::PositiveNumber);
  vj->add_option("--samples", samples, "random environments")
      ->check(CLI::PositiveNumber);
  vj->add_option("--seed", c.seed);
  add_depth(vj);
  add_width(vj);

  auto* lw = app.add_subcommand("laws", "lambda-model laws on random terms");
  lw->add_option("file", file)->required();
  lw->add_option("--samples", samples)->check(CLI::PositiveNumber);
  lw->add_option("--seed", c.seed);
  lw->add_option("--term-size", term_size)->check(CLI::PositiveNumber);
  lw->add_option("--probes", probes);
  add_depth(lw);
  add_width(lw);
  add_type_size(lw, laws_type_size);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_theory_check(file, out);
    if (sub->parsed()) return cmd_sub(file, a, b, out);
    if (tc->parsed())
      return cmd_typecheck(file, term, type, basis, certificate, c, out);
    if (ip->parsed()) {
      c.type_size = interp_type_size;
      return cmd_interp(file, term, env, c, out);
    }
    if (ex->parsed()) return cmd_extend(file, point, out_path, out);
    if (co->parsed()) return cmd_construct(stages, out_path, c, out);
    if (vj->parsed()) return cmd_verify_j(stages, samples, c, out);
    if (lw->parsed()) {
      c.type_size = laws_type_size;
      return cmd_laws(file, samples, term_size, probes, c, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace eitt
