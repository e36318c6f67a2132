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

#include "generation.hpp"

#include <set>

namespace eitt::testing {

namespace {

std::string describe(const char* clause, const Term& t, Type a, bool found) {
  return std::string(clause) + ": " + t.str() + " : " + a.str() +
         (found ? " found without a witness" : " has a witness but is not found");
}

}  // namespace

std::vector<std::string> generation_violations(Inferencer& inf,
                                               const Basis& basis,
                                               const Term& t,
                                               std::size_t depth) {
  const Theory& th = inf.theory();
  const TypeUniverse& u = inf.universe();
  std::vector<std::string> out;
  if (depth == 0) return out;
  const std::size_t sub = depth - 1;

  if (t.is_var()) {
    const auto b = basis.lookup(t.name());
    for (Type a : u.members()) {
      if (is_top_equiv(th, a)) continue;
      const bool found = inf.derivable(basis, t, a, depth);
      const bool rhs = b && subtype(th, *b, a);
      if (found != rhs) out.push_back(describe("var", t, a, found));
    }
  } else if (t.is_app()) {
    const Type gs = inf.generator(basis, t.arg(), sub);
    std::vector<Type> witnesses(u.members().begin(), u.members().end());
    witnesses.push_back(gs);
    for (Type a : u.members()) {
      if (is_top_equiv(th, a)) continue;
      const bool found = inf.derivable(basis, t, a, depth);
      bool rhs = false;
      for (Type b : witnesses) {
        if (inf.derivable(basis, t.arg(), b, sub) &&
            inf.derivable(basis, t.fun(), Type::arrow(b, a), sub)) {
          rhs = true;
          break;
        }
      }
      if (found != rhs) out.push_back(describe("app", t, a, found));
    }
  } else if (t.is_abs()) {
    std::set<std::string> avoid;
    for (const auto& [x, b] : basis.bindings()) avoid.insert(x);
    for (const auto& x : t.free_vars()) avoid.insert(x);
    const std::string x = fresh_name(t.hint(), avoid);
    const Term body = open_body(t, x);
    std::vector<Type> arrows;
    for (Type b : u.members()) {
      const Basis inner = basis.with(x, b);
      for (Type c : u.members())
        if (inf.derivable(inner, body, c, sub)) arrows.push_back(Type::arrow(b, c));
    }
    const Type m = Type::meet(arrows);
    for (Type a : u.members()) {
      if (is_top_equiv(th, a)) continue;
      const bool found = inf.derivable(basis, t, a, depth);
      if (found != subtype(th, m, a)) out.push_back(describe("abs", t, a, found));
      if (!a.is_arrow()) continue;
      const bool rhs =
          inf.derivable(basis.with(x, a.domain()), body, a.codomain(), sub);
      if (found != rhs) out.push_back(describe("abs-arrow", t, a, found));
    }
  }
  return out;
}

}  // namespace eitt::testing
