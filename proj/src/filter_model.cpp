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

#include "eitt/filter_model.hpp"

#include <random>
#include <set>

#include "eitt/errors.hpp"

namespace eitt {

namespace {

void same_theory(const Filter& a, const Filter& b) {
  if (!a.theory().same_as(b.theory())) throw TheoryMismatchError();
}

// Meet of the minimal elements of `types`, one per equivalence class.
Type meet_of_minimal(const Theory& th, const std::vector<Type>& types) {
  std::vector<Type> minimal;
  for (std::size_t i = 0; i < types.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < types.size() && keep; ++j) {
      if (j == i || !subtype(th, types[j], types[i])) continue;
      if (!subtype(th, types[i], types[j]) || j < i) keep = false;
    }
    if (keep) minimal.push_back(types[i]);
  }
  return Type::meet(minimal);
}

}  // namespace

Filter::Filter(Theory th, Type generator)
    : th_(std::move(th)), gen_(generator) {
  th_.check_type(gen_);
}

Filter Filter::bottom(Theory th) { return Filter(std::move(th), Type::top()); }

bool Filter::member(Type a) const { return subtype(th_, gen_, a); }

bool Filter::equals(const Filter& other) const {
  same_theory(*this, other);
  return equiv(th_, gen_, other.gen_);
}

bool Filter::subset_of(const Filter& other) const {
  same_theory(*this, other);
  return subtype(th_, other.gen_, gen_);
}

Filter Filter::restricted(const TypeUniverse& u) const {
  std::vector<Type> in;
  for (Type m : u.members())
    if (member(m)) in.push_back(m);
  return Filter(th_, meet_of_minimal(th_, in));
}

std::string Filter::str() const { return "up(" + gen_.str() + ")"; }

bool member(const Filter& f, Type a) { return f.member(a); }

Filter join(const Filter& f, const Filter& g) {
  same_theory(f, g);
  return Filter(f.theory(), Type::meet(f.generator(), g.generator()));
}

Filter apply(const Filter& f, const Filter& g) {
  same_theory(f, g);
  return Filter(f.theory(),
                apply_generator(f.theory(), f.generator(), g.generator()));
}

Filter apply(const Filter& f, const Filter& g, const TypeUniverse& u) {
  same_theory(f, g);
  std::vector<Type> s;
  for (Type d : u.members())
    if (subtype(f.theory(), f.generator(), Type::arrow(g.generator(), d)))
      s.push_back(d);
  return Filter(f.theory(), meet_of_minimal(f.theory(), s));
}

Env& Env::bind(const std::string& x, Filter f) {
  bindings_.insert_or_assign(x, std::move(f));
  return *this;
}

Basis Env::basis() const {
  std::map<std::string, Type> b;
  for (const auto& [x, f] : bindings_) b.emplace(x, f.generator());
  return Basis(std::move(b));
}

std::string Env::str() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [x, f] : bindings_) {
    if (!first) out += ',';
    first = false;
    std::string g = f.generator().str();
    std::erase(g, ' ');
    out += x + ":=up(" + g + ")";
  }
  return out + "]";
}

Model::Model(Theory th, TypeUniverse u, std::size_t depth, InferLimits limits)
    : inf_(std::move(th), std::move(u), limits), depth_(depth) {}

Filter Model::interp(const Term& t, const Env& env) {
  for (const auto& [x, f] : env.bindings())
    if (!f.theory().same_as(inf_.theory())) throw TheoryMismatchError();
  return Filter(inf_.theory(), inf_.generator(env.basis(), t, depth_));
}

Filter interp(const Theory& th, const Term& t, const Env& env,
              const TypeUniverse& u, std::size_t depth) {
  Model m(th, u, depth);
  return m.interp(t, env);
}

// ---------------------------------------------------------------------------
// Laws

bool LawsReport::all_pass() const { return failures() == 0; }

std::size_t LawsReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.pass ? 0 : 1;
  return n;
}

std::string LawsReport::str() const {
  std::string out;
  for (const auto& r : results) {
    out += r.law + " \"" + r.term + "\" " + r.env + (r.pass ? " PASS" : " FAIL");
    if (!r.pass && !r.detail.empty()) out += "  # " + r.detail;
    out += '\n';
  }
  return out;
}

namespace {

class LawRunner {
 public:
  LawRunner(Model& m, LawsOptions opt) : m_(m), opt_(opt) {}

  void sample(std::size_t index, const Term& t, const Env& env) {
    rng_.seed(opt_.seed * 0x9E3779B97F4A7C15ull + index);
    env_text_ = env.str();
    law1(t, env);
    law2(t, env);
    const Term lam = abstraction_of(t);
    law3(lam, env);
    law4(t, env);
    law5(lam, env);
    law6(lam, env);
    ext(t, env);
  }

  LawsReport report() { return std::move(report_); }

 private:
  void record(const std::string& law, const Term& t, const Filter& lhs,
              const Filter& rhs) {
    bool ok = lhs.equals(rhs);
    report_.results.push_back(
        {law, t.str(), env_text_, ok,
         ok ? "" : lhs.str() + " vs " + rhs.str()});
  }

  Filter interp(const Term& t, const Env& env) { return m_.interp(t, env); }

  Filter probe() {
    const auto& u = m_.universe();
    return m_.filter(u[rng_() % u.size()]);
  }

  std::set<std::string> names(const Term& t, const Env& env) {
    std::set<std::string> s(t.free_vars().begin(), t.free_vars().end());
    for (const auto& [x, f] : env.bindings()) s.insert(x);
    return s;
  }

  // t itself if it is an abstraction, otherwise t abstracted over its first
  // free variable (or a vacuous binder).
  Term abstraction_of(const Term& t) {
    if (t.is_abs()) return t;
    std::string x = t.free_vars().empty() ? fresh_name("v", names(t, {}))
                                          : t.free_vars().front();
    return Term::abs(x, t);
  }

  void law1(const Term& t, const Env& env) {
    for (const auto& x : names(t, env)) {
      auto it = env.bindings().find(x);
      Filter expected = it != env.bindings().end()
                            ? it->second
                            : Filter::bottom(m_.theory());
      record("LAW1", Term::var(x), interp(Term::var(x), env), expected);
    }
  }

  void law2(const Term& t, const Env& env) {
    if (t.is_app())
      record("LAW2", t, interp(t, env),
             apply(interp(t.fun(), env), interp(t.arg(), env)));
    Term tt = Term::app(t, t);
    record("LAW2", tt, interp(tt, env),
           apply(interp(t, env), interp(t, env)));
  }

  void law3(const Term& lam, const Env& env) {
    const Filter f = interp(lam, env);
    for (std::size_t i = 0; i < opt_.probes; ++i) {
      Filter x = probe();
      std::string y = fresh_name(lam.hint(), names(lam, env));
      Env e2 = env;
      e2.bind(y, x);
      record("LAW3", lam, apply(f, x), interp(open_body(lam, y), e2));
    }
  }

  void law4(const Term& t, const Env& env) {
    std::string y;
    for (const auto& [x, f] : env.bindings()) {
      const auto& fv = t.free_vars();
      if (!std::binary_search(fv.begin(), fv.end(), x)) {
        y = x;
        break;
      }
    }
    if (y.empty()) y = fresh_name("v", names(t, env));
    Env e2 = env;
    e2.bind(y, probe());
    record("LAW4", t, interp(t, env), interp(t, e2));
  }

  void law5(const Term& lam, const Env& env) {
    std::set<std::string> avoid = names(lam, env);
    avoid.insert(lam.hint());
    std::string y = fresh_name(lam.hint(), avoid);
    Term renamed = Term::abs(y, open_body(lam, y));
    record("LAW5", lam, interp(lam, env), interp(renamed, env));
  }

  void law6(const Term& lam, const Env& env) {
    std::string y = fresh_name(lam.hint(), names(lam, env));
    const Term body = open_body(lam, y);
    const Term body2 = Term::app(combinators::i(), body);
    bool hypothesis = true;
    for (Type a : m_.universe().members()) {
      Env e2 = env;
      e2.bind(y, m_.filter(a));
      if (!interp(body, e2).equals(interp(body2, e2))) {
        hypothesis = false;
        break;
      }
    }
    const Term lam2 = Term::abs(y, body2);
    const Filter lhs = interp(lam, env), rhs = interp(lam2, env);
    bool ok = !hypothesis || lhs.equals(rhs);
    report_.results.push_back({"LAW6", lam.str(), env_text_, ok,
                               ok ? "" : lhs.str() + " vs " + rhs.str()});
  }

  void ext(const Term& t, const Env& env) {
    std::string x = fresh_name("x", names(t, env));
    Term eta = Term::abs(x, Term::app(t, Term::var(x)));
    record("EXT", eta, interp(eta, env), interp(t, env));
  }

  Model& m_;
  LawsOptions opt_;
  std::mt19937_64 rng_;
  std::string env_text_;
  LawsReport report_;
};

}  // namespace

LawsReport model_laws_suite(Model& model,
                            std::span<const std::pair<Term, Env>> samples,
                            LawsOptions options) {
  LawRunner runner(model, options);
  for (std::size_t i = 0; i < samples.size(); ++i)
    runner.sample(i, samples[i].first, samples[i].second);
  return runner.report();
}

LawsReport model_laws_suite(const Theory& th,
                            std::span<const std::pair<Term, Env>> samples,
                            const TypeUniverse& u, LawsOptions options) {
  Model m(th, u, options.depth);
  return model_laws_suite(m, samples, options);
}

}  // namespace eitt
