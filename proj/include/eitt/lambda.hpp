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

#ifndef EITT_LAMBDA_HPP
#define EITT_LAMBDA_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace eitt {

namespace detail {
struct TermNode;
}

// Untyped lambda term in locally nameless form: bound occurrences are de
// Bruijn indices, free occurrences are names. Binders keep their source
// name as a printing hint only, so operator== is alpha-equivalence.
//
// Terms produced by the public constructors are locally closed. Bodies
// obtained through body() may contain loose index 0 (and more, under
// nested binders); they are meant for traversal, not for display.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Bound, Abs, App };

  static Term var(std::string name);
  static Term bound(std::size_t index);
  // \binder.body, binding the free occurrences of `binder` in `body`.
  static Term abs(const std::string& binder, const Term& body);
  static Term app(Term fun, Term arg);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_bound() const { return kind() == Kind::Bound; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_app() const { return kind() == Kind::App; }

  const std::string& name() const;  // Var
  std::size_t index() const;        // Bound
  const std::string& hint() const;  // Abs
  Term body() const;                // Abs
  Term fun() const;                 // App
  Term arg() const;                 // App

  std::size_t size() const;
  std::size_t height() const;
  // Free names, sorted.
  const std::vector<std::string>& free_vars() const;
  // Loose indices (counted from this node), sorted.
  const std::vector<std::size_t>& loose() const;
  bool locally_closed() const { return loose().empty(); }
  std::size_t hash() const;

  // Identity of the shared node; stable while any copy is alive.
  const void* node_id() const { return node_.get(); }

  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);

  struct Hash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
  };

 private:
  friend class TermBuilder;
  explicit Term(std::shared_ptr<const detail::TermNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

// Replaces loose index 0 of an abstraction body by Var(name).
Term open_body(const Term& abs, const std::string& name);
// Replaces loose index 0 of `body` (at the top level) by `value`, which
// must be locally closed.
Term instantiate(const Term& body, const Term& value);

// Capture-avoiding substitution t[x := u]; u must be locally closed.
Term substitute(const Term& t, const std::string& x, const Term& u);

// One leftmost-outermost beta contraction, or nullopt on a normal form.
std::optional<Term> beta_step(const Term& t);

// `base`, then base', base'', ... until a name outside `avoid`.
std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid);

//   Term   ::= '\' ident+ '.' Term | AppSeq
//   AppSeq ::= BTerm+            (left associative)
//   BTerm  ::= ident | '(' Term ')'
// Throws SyntaxError.
Term parse_term(std::string_view text);

std::string to_string(const Term& t);

namespace combinators {
Term i();            // \x.x
Term k();            // \x y.x
Term delta();        // \x.x x
Term delta_delta();  // (\x.x x) (\x.x x)
}  // namespace combinators

}  // namespace eitt

#endif  // EITT_LAMBDA_HPP
