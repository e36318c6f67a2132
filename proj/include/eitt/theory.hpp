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

#ifndef EITT_THEORY_HPP
#define EITT_THEORY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eitt/errors.hpp"
#include "eitt/types.hpp"

namespace eitt {

// One conjunct `domain -> codomain` of an atom's defining axiom. The
// domain is always an atom.
struct ArrowClause {
  Type domain;
  Type codomain;
};

// A subtyping judgement lhs <= rhs.
struct Judgement {
  Type lhs;
  Type rhs;
};

namespace detail {
struct TheoryImpl;
}

// An easy intersection type theory: a constant set containing Top, order
// axioms psi <= psi' between non-Top atoms, and for each non-Top atom psi
// exactly one defining axiom psi ~ (xi_1 -> E_1) & ... & (xi_n -> E_n).
//
// Theory is an immutable handle; copies share the axioms and the subtype
// memo table. Construction does not validate; see validate_theory().
class Theory {
 public:
  using OrderAxiom = std::pair<std::string, std::string>;

  Theory(std::string name, std::vector<std::string> atoms,
         std::vector<OrderAxiom> order,
         std::vector<std::pair<std::string, Type>> arrows);

  const std::string& name() const;
  // All constants, Top first, then in declaration order.
  const std::vector<std::string>& atoms() const;
  const std::set<std::string>& atom_set() const;
  bool has_atom(const std::string& name) const;
  const std::vector<OrderAxiom>& order_axioms() const;
  // Axioms in declaration order; an atom may appear more than once in an
  // invalid theory.
  const std::vector<std::pair<std::string, Type>>& arrow_axioms() const;

  // The body of psi's defining axiom, or nullopt if it has none.
  std::optional<Type> body(const std::string& atom) const;
  std::vector<ArrowClause> clauses(const std::string& atom) const;

  // Reflexive-transitive closure of the order axioms.
  bool order_leq(const std::string& lo, const std::string& hi) const;

  Type parse(std::string_view text) const;
  // Throws UnknownAtomError if `t` mentions an atom outside the theory.
  void check_type(Type t) const;

  // Returns a copy with a fresh memo table and another name.
  Theory renamed(std::string name) const;
  Theory with_atom(std::string atom, Type body) const;

  // Atoms, axiom bodies and their subterms.
  std::vector<Type> axiom_types() const;

  bool same_as(const Theory& other) const { return impl_ == other.impl_; }

  detail::TheoryImpl& impl() const { return *impl_; }

 private:
  std::shared_ptr<detail::TheoryImpl> impl_;
};

// The theory whose filter model is Scott's D-infinity: constants {Top, w}
// and the single axiom w ~ Top -> w.
Theory dinf_theory();

struct SubtypeLimits {
  std::size_t memo_cap = 5'000'000;
};

// Decides a <= b in the theory. Thread-safe; definitive results are
// memoized per theory. Throws UnknownAtomError or ResourceError.
bool subtype(const Theory& th, Type a, Type b);
bool equiv(const Theory& th, Type a, Type b);
bool is_top_equiv(const Theory& th, Type a);

// Generator of the application of principal filters (up f) . (up g):
// the meet of the codomains of those arrows of f (atoms unfolded once)
// whose domain lies above g; Top if there are none. For every D,
// f <= g -> D iff apply_generator(th, f, g) <= D.
Type apply_generator(const Theory& th, Type f, Type g);

// Caps the memo table of `th` (and its copies).
void set_subtype_limits(const Theory& th, SubtypeLimits limits);
std::size_t subtype_memo_size(const Theory& th);

// Self-test for the arrow-decomposition property: compares
//   (A_1 -> B_1) & ... & (A_n -> B_n) <= C -> D   (by subtype)
// against
//   exists J subset {1..n}. C <= &_{j in J} A_j  and  &_{j in J} B_j <= D
// computed by enumerating every subset J. Returns true iff they agree.
// Throws PreconditionError if D ~ Top or n > 20.
bool beta_soundness_check(const Theory& th,
                          std::span<const std::pair<Type, Type>> lhs, Type c,
                          Type d);

struct Violation {
  int clause;  // 2, 3, 4 or 5
  std::string axiom;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

ValidationReport validate_theory(const Theory& th);

// Textual theory files:
//   theory <name> {
//     atoms: id (, id)*;
//     order: id <= id; ...
//     arrows: id ~ <Type>; ...
//   }
// `#` and `//` start line comments.
Theory parse_theory(std::string_view text);
std::string print_theory(const Theory& th);
// Parses and validates; throws ValidationError on a violation.
Theory load_theory(std::string_view text);
Theory load_theory_file(const std::string& path);
void save_theory_file(const Theory& th, const std::string& path);

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("theory failed validation:\n" + report.str()),
        report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace eitt

#endif  // EITT_THEORY_HPP
