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

#ifndef EITT_TYPES_HPP
#define EITT_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eitt {

inline constexpr std::string_view kTopName = "Top";

enum class TypeKind : std::uint8_t { Atom, Arrow, Intersection };

namespace detail {
struct TypeNode;
}

// An intersection type in normal form.
//
// Types are hash-consed: two Types are equal iff they have the same normal
// form, i.e. they agree up to associativity, commutativity and idempotence
// of intersection. Intersection parts are flattened, deduplicated and kept
// in canonical order. Handles are cheap to copy and immutable; nodes live
// for the lifetime of the process.
class Type {
 public:
  // The universal type.
  Type();

  static Type top();
  static Type atom(std::string_view name);
  static Type arrow(Type domain, Type codomain);
  static Type meet(Type a, Type b);
  // Normalized intersection of `parts`; the empty intersection is Top.
  static Type meet(std::span<const Type> parts);

  TypeKind kind() const;
  bool is_atom() const { return kind() == TypeKind::Atom; }
  bool is_arrow() const { return kind() == TypeKind::Arrow; }
  bool is_intersection() const { return kind() == TypeKind::Intersection; }
  bool is_top() const;

  const std::string& name() const;  // atoms only
  Type domain() const;              // arrows only
  Type codomain() const;            // arrows only

  // Conjuncts. A non-intersection type is its own single part.
  std::span<const Type> parts() const;
  // Distinct atoms occurring in the type, canonical order.
  std::span<const Type> atoms() const;

  // Node count of the binary syntax tree of the normal form.
  std::size_t size() const;
  // Stable structural encoding; canonical order compares (size, key).
  const std::string& key() const;
  std::uint64_t id() const;

  std::string str() const;

  friend bool operator==(Type a, Type b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(Type a, Type b);

  struct Hash {
    std::size_t operator()(Type t) const noexcept {
      return std::hash<const void*>{}(t.node_);
    }
  };

 private:
  explicit Type(const detail::TypeNode* node) : node_(node) {}
  friend struct detail::TypeNode;
  friend class TypeFactory;
  const detail::TypeNode* node_;
};

std::ostream& operator<<(std::ostream& os, Type t);

// Raw (unnormalized) syntax tree, as written. Intersections are binary.
struct TypeExpr {
  TypeKind kind = TypeKind::Atom;
  std::string name;
  std::vector<TypeExpr> children;  // arrow: {dom, cod}; intersection: {l, r}

  static TypeExpr atom(std::string name);
  static TypeExpr arrow(TypeExpr dom, TypeExpr cod);
  static TypeExpr inter(TypeExpr l, TypeExpr r);
};

Type normalize(const TypeExpr& expr);
// Re-normalizes an already built type; identity on Types.
Type normalize(Type t);

// Grammar:
//   Type ::= ITy ('->' Type)?
//   ITy  ::= BTy ('&' BTy)*
//   BTy  ::= ident | 'Top' | '(' Type ')'
TypeExpr parse_type_expr(std::string_view text);
// Parses and normalizes; every identifier must be "Top" or in `constants`.
Type parse_type(std::string_view text, const std::set<std::string>& constants);

using TypeSet = std::set<Type>;

// Appends all subterms of `t` (including `t`). Subterms of an intersection
// are its parts and their subterms.
void collect_subterms(Type t, std::vector<Type>& out);

inline constexpr std::size_t kDefaultUniverseCap = 20000;

// A finite, subterm-closed set of types containing Top, kept in canonical
// order. Used as the search space for bounded inference and as the
// approximation domain for filters.
class TypeUniverse {
 public:
  TypeUniverse();

  // Subterm closure of `members` plus Top. No meets are added.
  static TypeUniverse from_members(std::span<const Type> members,
                                   std::size_t width_bound,
                                   std::string provenance);

  std::span<const Type> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Type t) const { return index_.count(t) != 0; }
  std::optional<std::size_t> index_of(Type t) const;
  Type operator[](std::size_t i) const { return members_[i]; }
  std::size_t width_bound() const { return width_bound_; }
  const std::string& provenance() const { return provenance_; }

  // Members whose atoms all lie in `atoms` (still subterm-closed).
  TypeUniverse restricted_to(const std::set<std::string>& atoms) const;
  TypeUniverse merged(const TypeUniverse& other) const;

 private:
  std::vector<Type> members_;
  std::unordered_map<Type, std::size_t, Type::Hash> index_;
  std::size_t width_bound_ = 1;
  std::string provenance_;
};

// Smallest subterm-closed set containing `seed` and Top, extended with the
// normalized intersections of every 2..width_bound distinct non-Top members
// of that set. Throws ResourceError past `cap` members.
TypeUniverse subterm_closure(std::span<const Type> seed,
                             std::size_t width_bound,
                             std::size_t cap = kDefaultUniverseCap);

// Every normal form of size <= max_size over `atoms` (Top is always added).
TypeUniverse enumerate_types(const std::set<std::string>& atoms,
                             std::size_t max_size,
                             std::size_t cap = kDefaultUniverseCap);

}  // namespace eitt

#endif  // EITT_TYPES_HPP
