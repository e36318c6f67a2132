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

#ifndef EITT_ASSIGNMENT_HPP
#define EITT_ASSIGNMENT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eitt/lambda.hpp"
#include "eitt/theory.hpp"
#include "eitt/types.hpp"

namespace eitt {

// A finite basis: at most one type per variable.
class Basis {
 public:
  Basis() = default;
  Basis(std::initializer_list<std::pair<const std::string, Type>> init)
      : bindings_(init) {}
  explicit Basis(std::map<std::string, Type> bindings)
      : bindings_(std::move(bindings)) {}

  std::optional<Type> lookup(const std::string& x) const;
  bool contains(const std::string& x) const { return bindings_.count(x) != 0; }
  // Throws PreconditionError if x is already bound.
  Basis with(const std::string& x, Type a) const;
  const std::map<std::string, Type>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  std::string str() const;  // {x: A, y: B}

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.bindings_ == b.bindings_;
  }

 private:
  std::map<std::string, Type> bindings_;
};

enum class Rule : std::uint8_t { Ax, AxTop, ArrowIntro, ArrowElim, MeetIntro, Sub };

std::string rule_name(Rule r);  // ax, axTop, ->I, ->E, &I, <=

// A derivation tree of Basis |- Term : Type. Terms at every node are
// locally closed; ->I opens its body with the variable its premise adds to
// the basis. `side` is the judgement of a <= node.
struct Derivation {
  Rule rule;
  Basis basis;
  Term term;
  Type type;
  std::vector<Derivation> premises;
  std::optional<Judgement> side;

  std::size_t node_count() const;
};

struct CheckResult {
  bool ok = true;
  std::string node;  // path of the failing node, e.g. "root.1.0"
  std::string message;
  explicit operator bool() const { return ok; }
};

CheckResult check_derivation(const Theory& th, const Derivation& d);

// One line per node, premises indented below their conclusion:
//   [rule] {basis} |- term : type
std::string serialize(const Derivation& d);

struct InferLimits {
  // Non-memoized evaluation steps per Inferencer before ResourceError.
  std::size_t budget = 4'000'000;
};

// Bounded type inference over a finite universe u.
//
// For a term t in a basis the inferencer finds a generator g, a type with
// basis |- t : g, such that basis |- t : A is found iff g <= A:
//   variable x     g = G(x), Top if x is unbound
//   t s            g = apply_generator(g_t, g_s)
//   \x.t           g = meet over B in u of B -> g(t; x:B)
// Depth 0 yields Top. The universe only bounds the domains tried for an
// abstraction; infer() reports the members of u above g. Every such member
// is derivable (see certify()), and results only grow with u and depth.
//
// Not thread-safe; one Inferencer per thread.
class Inferencer {
 public:
  Inferencer(Theory th, TypeUniverse u, InferLimits limits = {});
  ~Inferencer();
  Inferencer(Inferencer&&) noexcept;
  Inferencer& operator=(Inferencer&&) noexcept;

  const Theory& theory() const;
  const TypeUniverse& universe() const;

  std::vector<Type> infer(const Basis& basis, const Term& t,
                          std::size_t depth);
  Type generator(const Basis& basis, const Term& t, std::size_t depth);
  // Whether basis |- t : a is found, for any type a (not only members of u).
  bool derivable(const Basis& basis, const Term& t, Type a, std::size_t depth);

  // A derivation of basis |- t : a, or nullopt if derivable() is false.
  std::optional<Derivation> certify(const Basis& basis, const Term& t, Type a,
                                    std::size_t depth);

  // Memoized order between universe members.
  bool leq(std::size_t i, std::size_t j);
  std::size_t steps() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<Type> infer(const Theory& th, const Basis& basis, const Term& t,
                        const TypeUniverse& u, std::size_t depth);

// Elimination of intersection is admissible: if a & b is inferred for t
// then so are a and b. Returns false on a counterexample, true otherwise
// (including when a & b is not inferred at all).
bool intersection_elim_check(const Theory& th, const Basis& basis,
                             const Term& t, Type a, Type b,
                             const TypeUniverse& u, std::size_t depth);

}  // namespace eitt

#endif  // EITT_ASSIGNMENT_HPP
