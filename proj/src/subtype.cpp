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

// Decision procedure for the preorder of an easy intersection type theory.
//
// The goal a <= b splits over the conjuncts of b. Top is trivial. An atom
// psi holds if an atom of a lies below psi in the order closure, and
// otherwise reduces to psi's defining body (psi ~ body). An arrow C -> D
// with D not ~ Top holds iff, writing the conjuncts of a (atoms unfolded
// once) as arrows A_i -> B_i, the B_i with C <= A_i meet below D; taking
// every such i is the maximal choice of index set, so no subset search is
// needed.
//
// Goals are memoized. A goal met again while still in progress counts as
// false, which gives the least fixpoint of the derivation rules: any
// finite derivation of a goal never needs the goal itself. A false answer
// that leaned on an in-progress ancestor is provisional and is not
// memoized; it is recomputed if asked again from outside the cycle.

#include <algorithm>
#include <climits>

#include "eitt/theory.hpp"
#include "theory_impl.hpp"

namespace eitt {

namespace detail {

void SubtypeMemo::store(Type a, Type b, bool value) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (table_.size() >= cap_)
    throw ResourceError("subtype memo table exceeds cap of " +
                        std::to_string(cap_) + " entries");
  table_.emplace(std::make_pair(a.id(), b.id()), value);
}

}  // namespace detail

namespace {

using detail::TheoryImpl;

constexpr int kNoCycle = INT_MAX;

struct Outcome {
  bool value;
  int low;  // shallowest in-progress goal this false result depends on
};

class Solver {
 public:
  explicit Solver(TheoryImpl& th) : th_(th) {}

  Outcome solve(Type a, Type b) {
    if (a == b || b.is_top()) return {true, kNoCycle};
    if (auto cached = th_.memo.lookup(a, b)) return {*cached, kNoCycle};
    const auto goal = std::make_pair(a.id(), b.id());
    if (auto it = in_progress_.find(goal); it != in_progress_.end())
      return {false, it->second};

    const int depth = static_cast<int>(in_progress_.size());
    in_progress_.emplace(goal, depth);
    Outcome r = conjuncts(a, b);
    in_progress_.erase(goal);
    if (r.value || r.low >= depth) {
      th_.memo.store(a, b, r.value);
      r.low = kNoCycle;
    }
    return r;
  }

 private:
  Outcome conjuncts(Type a, Type b) {
    if (!b.is_intersection()) return part(a, b);
    int low = kNoCycle;
    for (Type p : b.parts()) {
      Outcome r = solve(a, p);
      if (!r.value) return {false, std::min(low, r.low)};
    }
    return {true, kNoCycle};
  }

  Outcome part(Type a, Type b) {
    if (b.is_atom()) return atom_goal(a, b);
    return arrow_goal(a, b.domain(), b.codomain());
  }

  Outcome atom_goal(Type a, Type psi) {
    for (Type p : a.parts())
      if (p.is_atom() && order_leq(p.name(), psi.name()))
        return {true, kNoCycle};
    auto it = th_.bodies.find(psi.name());
    if (it == th_.bodies.end()) return {false, kNoCycle};
    return solve(a, it->second);
  }

  Outcome arrow_goal(Type a, Type c, Type d) {
    int low = kNoCycle;
    Outcome trivial = solve(Type::top(), d);
    if (trivial.value) return {true, kNoCycle};
    low = std::min(low, trivial.low);

    std::vector<Type> codomains;
    auto consider = [&](Type arrow) {
      Outcome r = solve(c, arrow.domain());
      if (r.value)
        codomains.push_back(arrow.codomain());
      else
        low = std::min(low, r.low);
    };
    for (Type p : a.parts()) {
      if (p.is_arrow()) {
        consider(p);
      } else if (!p.is_top()) {
        auto it = th_.expansion.find(p.name());
        if (it != th_.expansion.end())
          for (Type arrow : it->second) consider(arrow);
      }
    }
    if (codomains.empty()) return {false, low};
    Outcome r = solve(Type::meet(codomains), d);
    if (r.value) return {true, kNoCycle};
    return {false, std::min(low, r.low)};
  }

  bool order_leq(const std::string& lo, const std::string& hi) const {
    if (lo == hi) return true;
    auto it = th_.up.find(lo);
    return it != th_.up.end() && it->second.count(hi) != 0;
  }

  TheoryImpl& th_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int,
                     detail::GoalHash>
      in_progress_;
};

}  // namespace

bool subtype(const Theory& th, Type a, Type b) {
  th.check_type(a);
  th.check_type(b);
  Solver solver(th.impl());
  return solver.solve(a, b).value;
}

bool equiv(const Theory& th, Type a, Type b) {
  return subtype(th, a, b) && subtype(th, b, a);
}

bool is_top_equiv(const Theory& th, Type a) {
  return subtype(th, Type::top(), a);
}

Type apply_generator(const Theory& th, Type f, Type g) {
  th.check_type(f);
  th.check_type(g);
  const TheoryImpl& t = th.impl();
  std::vector<Type> codomains;
  auto consider = [&](Type arrow) {
    if (subtype(th, g, arrow.domain())) codomains.push_back(arrow.codomain());
  };
  for (Type p : f.parts()) {
    if (p.is_arrow()) {
      consider(p);
    } else if (!p.is_top()) {
      auto it = t.expansion.find(p.name());
      if (it != t.expansion.end())
        for (Type arrow : it->second) consider(arrow);
    }
  }
  return Type::meet(codomains);
}

void set_subtype_limits(const Theory& th, SubtypeLimits limits) {
  th.impl().memo.set_cap(limits.memo_cap);
}

std::size_t subtype_memo_size(const Theory& th) {
  return th.impl().memo.size();
}

bool beta_soundness_check(const Theory& th,
                          std::span<const std::pair<Type, Type>> lhs, Type c,
                          Type d) {
  if (is_top_equiv(th, d))
    throw PreconditionError("codomain is equivalent to Top");
  if (lhs.size() > 20)
    throw PreconditionError("too many arrows for subset enumeration");

  std::vector<Type> arrows;
  for (const auto& [a, b] : lhs) arrows.push_back(Type::arrow(a, b));
  const bool by_subtype =
      subtype(th, Type::meet(arrows), Type::arrow(c, d));

  bool by_subsets = false;
  const std::size_t n = lhs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !by_subsets;
       ++mask) {
    std::vector<Type> doms, cods;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        doms.push_back(lhs[i].first);
        cods.push_back(lhs[i].second);
      }
    }
    by_subsets = subtype(th, c, Type::meet(doms)) &&
                 subtype(th, Type::meet(cods), d);
  }
  return by_subtype == by_subsets;
}

}  // namespace eitt
