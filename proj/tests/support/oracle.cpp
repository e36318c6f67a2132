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

#include "oracle.hpp"

#include "eitt/errors.hpp"

namespace eitt::testing {

OracleClosure::OracleClosure(const Theory& th, std::size_t cap,
                             std::size_t max_members)
    : u_(enumerate_types(th.atom_set(), cap, max_members)) {
  const std::size_t n = u_.size();
  const std::size_t words = (n + 63) / 64;
  rel_.assign(n, Row(words, 0));
  auto in = [&](Type t) { return u_.contains(t); };
  auto fact = [&](Type a, Type b) {
    if (in(a) && in(b)) set(idx(a), idx(b));
  };
  const Type top = Type::top();

  // Axioms.
  for (Type a : u_.members()) {
    fact(a, a);    // refl
    fact(a, top);  // Omega
    // incl: a meet is below the meet of any non-empty subset of its parts
    // (idempotence is absorbed by normal forms).
    auto parts = a.parts();
    if (parts.size() > 1 && parts.size() < 16) {
      for (std::uint32_t mask = 1; mask < (1u << parts.size()); ++mask) {
        std::vector<Type> sub;
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (mask >> i & 1u) sub.push_back(parts[i]);
        fact(a, Type::meet(sub));
      }
    }
  }
  fact(top, Type::arrow(top, top));  // Omega-eta
  for (Type f : u_.members()) {       // arrow-meet
    if (!f.is_arrow()) continue;
    for (Type g : u_.members()) {
      if (!g.is_arrow() || g.domain() != f.domain() || f == g) continue;
      fact(Type::meet(f, g),
           Type::arrow(f.domain(), Type::meet(f.codomain(), g.codomain())));
    }
  }
  for (const auto& [lo, hi] : th.order_axioms())
    fact(Type::atom(lo), Type::atom(hi));
  for (const auto& [atom, body] : th.arrow_axioms()) {
    fact(Type::atom(atom), body);
    fact(body, Type::atom(atom));
  }

  // Rules, to a fixpoint: glb (mon with idem), eta, trans.
  std::vector<std::size_t> arrows, meets;
  for (std::size_t i = 0; i < n; ++i) {
    if (u_[i].is_arrow()) arrows.push_back(i);
    if (u_[i].is_intersection()) meets.push_back(i);
  }
  bool changed = true;
  while (changed) {
    ++rounds_;
    changed = transitive_closure();
    for (std::size_t yi : meets) {
      const Type y = u_[yi];
      std::vector<std::size_t> ps;
      for (Type p : y.parts()) ps.push_back(idx(p));
      for (std::size_t c = 0; c < n; ++c) {
        if (get(c, yi)) continue;
        bool all = true;
        for (std::size_t p : ps) all = all && get(c, p);
        if (all) changed |= set(c, yi);
      }
    }
    for (std::size_t fi : arrows) {
      const std::size_t fa = idx(u_[fi].domain()), fb = idx(u_[fi].codomain());
      for (std::size_t gi : arrows) {
        if (get(fi, gi)) continue;
        const std::size_t ga = idx(u_[gi].domain()), gb = idx(u_[gi].codomain());
        if (get(ga, fa) && get(fb, gb)) changed |= set(fi, gi);
      }
    }
  }
}

bool OracleClosure::set(std::size_t i, std::size_t j) {
  std::uint64_t& w = rel_[i][j / 64];
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  if (w & bit) return false;
  w |= bit;
  return true;
}

std::size_t OracleClosure::idx(Type t) const {
  auto i = u_.index_of(t);
  if (!i) throw PreconditionError("type outside the oracle universe: " + t.str());
  return *i;
}

bool OracleClosure::transitive_closure() {
  bool changed = false;
  const std::size_t n = u_.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || !get(i, k)) continue;
      Row& ri = rel_[i];
      const Row& rk = rel_[k];
      for (std::size_t w = 0; w < ri.size(); ++w) {
        const std::uint64_t add = rk[w] & ~ri[w];
        if (add) {
          ri[w] |= add;
          changed = true;
        }
      }
    }
  }
  return changed;
}

bool OracleClosure::leq(Type a, Type b) const { return get(idx(a), idx(b)); }

bool oracle_subtype(const Theory& th, Type a, Type b, std::size_t size_cap) {
  if (a.size() > size_cap || b.size() > size_cap)
    throw PreconditionError("query types exceed the oracle size cap");
  return OracleClosure(th, size_cap).leq(a, b);
}

}  // namespace eitt::testing
