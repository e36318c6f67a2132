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

#include "eitt/theory.hpp"

#include <algorithm>
#include <sstream>

#include "theory_impl.hpp"

namespace eitt {

using detail::TheoryImpl;

Theory::Theory(std::string name, std::vector<std::string> atoms,
               std::vector<OrderAxiom> order,
               std::vector<std::pair<std::string, Type>> arrows)
    : impl_(std::make_shared<TheoryImpl>()) {
  TheoryImpl& t = *impl_;
  t.name = std::move(name);
  t.atoms.push_back(std::string(kTopName));
  for (auto& a : atoms)
    if (a != kTopName) t.atoms.push_back(std::move(a));
  t.atom_set.insert(t.atoms.begin(), t.atoms.end());
  t.order = std::move(order);
  t.arrows = std::move(arrows);

  for (const auto& [atom, body] : t.arrows) t.bodies.try_emplace(atom, body);

  // Reflexive-transitive closure of the order axioms.
  for (const auto& a : t.atoms) t.up[a].insert(a);
  for (const auto& [lo, hi] : t.order) {
    t.up[lo].insert(lo);
    t.up[hi].insert(hi);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : t.order) {
      auto& lo_up = t.up[lo];
      for (const auto& x : std::set<std::string>(t.up[hi]))
        changed |= lo_up.insert(x).second;
    }
  }

  for (const auto& [atom, ups] : t.up) {
    std::vector<Type> arrows_of;
    for (const auto& hi : ups) {
      auto it = t.bodies.find(hi);
      if (it == t.bodies.end()) continue;
      for (Type p : it->second.parts())
        if (p.is_arrow()) arrows_of.push_back(p);
    }
    std::sort(arrows_of.begin(), arrows_of.end());
    arrows_of.erase(std::unique(arrows_of.begin(), arrows_of.end()),
                    arrows_of.end());
    t.expansion.emplace(atom, std::move(arrows_of));
  }
}

const std::string& Theory::name() const { return impl_->name; }
const std::vector<std::string>& Theory::atoms() const { return impl_->atoms; }
const std::set<std::string>& Theory::atom_set() const {
  return impl_->atom_set;
}
bool Theory::has_atom(const std::string& name) const {
  return impl_->atom_set.count(name) != 0;
}
const std::vector<Theory::OrderAxiom>& Theory::order_axioms() const {
  return impl_->order;
}
const std::vector<std::pair<std::string, Type>>& Theory::arrow_axioms() const {
  return impl_->arrows;
}

std::optional<Type> Theory::body(const std::string& atom) const {
  auto it = impl_->bodies.find(atom);
  if (it == impl_->bodies.end()) return std::nullopt;
  return it->second;
}

std::vector<ArrowClause> Theory::clauses(const std::string& atom) const {
  std::vector<ArrowClause> out;
  if (auto b = body(atom))
    for (Type p : b->parts())
      if (p.is_arrow()) out.push_back({p.domain(), p.codomain()});
  return out;
}

bool Theory::order_leq(const std::string& lo, const std::string& hi) const {
  if (lo == hi) return true;
  auto it = impl_->up.find(lo);
  return it != impl_->up.end() && it->second.count(hi) != 0;
}

Type Theory::parse(std::string_view text) const {
  return parse_type(text, impl_->atom_set);
}

void Theory::check_type(Type t) const {
  for (Type a : t.atoms())
    if (!impl_->atom_set.count(a.name())) throw UnknownAtomError(a.name());
}

Theory Theory::renamed(std::string name) const {
  return Theory(std::move(name), impl_->atoms, impl_->order, impl_->arrows);
}

Theory Theory::with_atom(std::string atom, Type body) const {
  auto atoms = impl_->atoms;
  auto arrows = impl_->arrows;
  atoms.push_back(atom);
  arrows.emplace_back(std::move(atom), body);
  return Theory(impl_->name, std::move(atoms), impl_->order,
                std::move(arrows));
}

std::vector<Type> Theory::axiom_types() const {
  std::vector<Type> out;
  for (const auto& a : impl_->atoms) out.push_back(Type::atom(a));
  for (const auto& [atom, body] : impl_->arrows) collect_subterms(body, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Theory dinf_theory() {
  Type w = Type::atom("w");
  return Theory("dinf", {"w"}, {}, {{"w", Type::arrow(Type::top(), w)}});
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& v : violations)
    os << "clause " << v.clause << ": " << v.axiom << ": " << v.message
       << '\n';
  return os.str();
}

namespace {

std::string order_text(const Theory::OrderAxiom& ax) {
  return ax.first + " <= " + ax.second;
}

std::string arrow_text(const std::string& atom, Type body) {
  return atom + " ~ " + body.str();
}

// psi <= psi' is licensed iff every clause of psi' is dominated by a
// clause of psi: xi' <= xi and E <= E'.
bool compatible(const Theory& th, const std::string& lo,
                const std::string& hi) {
  auto lo_clauses = th.clauses(lo);
  for (const auto& k : th.clauses(hi)) {
    bool found = false;
    for (const auto& h : lo_clauses) {
      if (subtype(th, k.domain, h.domain) &&
          subtype(th, h.codomain, k.codomain)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_theory(const Theory& th) {
  ValidationReport report;
  auto add = [&](int clause, std::string axiom, std::string msg) {
    report.violations.push_back({clause, std::move(axiom), std::move(msg)});
  };

  std::set<std::string> seen;
  for (const auto& a : th.atoms())
    if (!seen.insert(a).second) add(2, a, "constant declared twice");

  for (const auto& ax : th.order_axioms()) {
    for (const auto* side : {&ax.first, &ax.second}) {
      if (*side == kTopName)
        add(2, order_text(ax), "order axioms may not mention Top");
      else if (!th.has_atom(*side))
        add(2, order_text(ax), "unknown atom '" + *side + "'");
    }
  }

  std::map<std::string, int> axiom_count;
  for (const auto& [atom, body] : th.arrow_axioms()) {
    const std::string text = arrow_text(atom, body);
    if (atom == kTopName) {
      add(2, text, "Top may not have a defining axiom");
      continue;
    }
    if (!th.has_atom(atom)) {
      add(2, text, "unknown atom '" + atom + "'");
      continue;
    }
    ++axiom_count[atom];
    for (Type a : body.atoms())
      if (!th.has_atom(a.name()))
        add(2, text, "unknown atom '" + a.name() + "'");
    for (Type p : body.parts()) {
      if (!p.is_arrow())
        add(2, text, "body conjunct '" + p.str() + "' is not an arrow");
      else if (!p.domain().is_atom())
        add(2, text, "arrow domain '" + p.domain().str() + "' is not an atom");
    }
  }

  for (const auto& a : th.atoms()) {
    if (a == kTopName) continue;
    int n = axiom_count[a];
    if (n == 0) add(4, a, "no defining axiom");
    if (n > 1) add(4, a, "more than one defining axiom");
  }

  // Compatibility needs a well-formed theory to run subtype on.
  if (!report.ok()) return report;

  for (const auto& ax : th.order_axioms())
    if (!compatible(th, ax.first, ax.second))
      add(5, order_text(ax), "clauses of the atoms are not compatible");

  for (const auto& lo : th.atoms()) {
    if (lo == kTopName) continue;
    for (const auto& hi : th.atoms()) {
      if (hi == kTopName || hi == lo) continue;
      if (compatible(th, lo, hi) &&
          !subtype(th, Type::atom(lo), Type::atom(hi)))
        add(5, lo + " <= " + hi,
            "clauses are compatible but the order is not derivable");
    }
  }
  return report;
}

}  // namespace eitt
