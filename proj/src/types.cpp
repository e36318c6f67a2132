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

#include "eitt/types.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <ostream>
#include <unordered_set>

#include "eitt/errors.hpp"

namespace eitt {

namespace detail {

struct TypeNode {
  TypeKind kind;
  std::string name;
  std::string key;
  std::size_t size = 1;
  std::uint64_t id = 0;
  std::vector<Type> parts;  // intersection parts, or {self}
  std::vector<Type> atoms;
  Type dom{static_cast<const TypeNode*>(nullptr)};
  Type cod{static_cast<const TypeNode*>(nullptr)};
};

}  // namespace detail

using detail::TypeNode;

class TypeFactory {
 public:
  static TypeFactory& instance() {
    static TypeFactory factory;
    return factory;
  }

  Type make_atom(std::string_view name) {
    std::string key(name);
    return intern(std::move(key), [&](TypeNode& n) {
      n.kind = TypeKind::Atom;
      n.name = std::string(name);
      n.size = 1;
    });
  }

  Type make_arrow(Type dom, Type cod) {
    std::string key;
    key.reserve(dom.key().size() + cod.key().size() + 4);
    key += '(';
    key += dom.key();
    key += '>';
    key += cod.key();
    key += ')';
    return intern(std::move(key), [&](TypeNode& n) {
      n.kind = TypeKind::Arrow;
      n.dom = dom;
      n.cod = cod;
      n.size = 1 + dom.size() + cod.size();
      n.atoms = merge_atoms(std::vector<Type>{dom, cod});
    });
  }

  // `parts` must be sorted, distinct, non-intersection and >= 2 long.
  Type make_intersection(std::vector<Type> parts) {
    std::string key = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) key += '&';
      key += parts[i].key();
    }
    key += '}';
    return intern(std::move(key), [&](TypeNode& n) {
      n.kind = TypeKind::Intersection;
      n.size = parts.size() - 1;
      for (Type p : parts) n.size += p.size();
      n.atoms = merge_atoms(parts);
      n.parts = std::move(parts);
    });
  }

  static const TypeNode* node(Type t) { return t.node_; }

 private:
  TypeFactory() = default;

  static std::vector<Type> merge_atoms(std::span<const Type> types) {
    std::vector<Type> out;
    for (Type t : types) {
      auto a = t.atoms();
      out.insert(out.end(), a.begin(), a.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  template <typename Init>
  Type intern(std::string key, Init&& init) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return Type(it->second.get());
    auto node = std::make_unique<TypeNode>();
    init(*node);
    node->key = key;
    node->id = next_id_++;
    Type self(node.get());
    if (node->kind != TypeKind::Intersection) node->parts = {self};
    if (node->kind == TypeKind::Atom) node->atoms = {self};
    const TypeNode* raw = node.get();
    table_.emplace(std::move(key), std::move(node));
    return Type(raw);
  }

  std::mutex mutex_;
  std::unordered_map<std::string, std::unique_ptr<TypeNode>> table_;
  std::uint64_t next_id_ = 0;
};

Type::Type() : Type(top()) {}

Type Type::top() {
  static const Type t = TypeFactory::instance().make_atom(kTopName);
  return t;
}

Type Type::atom(std::string_view name) {
  return TypeFactory::instance().make_atom(name);
}

Type Type::arrow(Type domain, Type codomain) {
  return TypeFactory::instance().make_arrow(domain, codomain);
}

Type Type::meet(Type a, Type b) {
  const Type both[] = {a, b};
  return meet(std::span<const Type>(both));
}

Type Type::meet(std::span<const Type> parts) {
  std::vector<Type> flat;
  for (Type p : parts) {
    auto ps = p.parts();
    flat.insert(flat.end(), ps.begin(), ps.end());
  }
  if (flat.empty()) return top();
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.size() == 1) return flat.front();
  return TypeFactory::instance().make_intersection(std::move(flat));
}

TypeKind Type::kind() const { return node_->kind; }
bool Type::is_top() const { return *this == top(); }
const std::string& Type::name() const { return node_->name; }
Type Type::domain() const { return node_->dom; }
Type Type::codomain() const { return node_->cod; }
std::span<const Type> Type::parts() const { return node_->parts; }
std::span<const Type> Type::atoms() const { return node_->atoms; }
std::size_t Type::size() const { return node_->size; }
const std::string& Type::key() const { return node_->key; }
std::uint64_t Type::id() const { return node_->id; }

std::strong_ordering operator<=>(Type a, Type b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.key() <=> b.key();
}

namespace {

void print(Type t, std::string& out) {
  switch (t.kind()) {
    case TypeKind::Atom:
      out += t.name();
      return;
    case TypeKind::Arrow:
      if (t.domain().is_arrow()) {
        out += '(';
        print(t.domain(), out);
        out += ')';
      } else {
        print(t.domain(), out);
      }
      out += " -> ";
      print(t.codomain(), out);
      return;
    case TypeKind::Intersection: {
      bool first = true;
      for (Type p : t.parts()) {
        if (!first) out += " & ";
        first = false;
        if (p.is_arrow()) {
          out += '(';
          print(p, out);
          out += ')';
        } else {
          print(p, out);
        }
      }
      return;
    }
  }
}

}  // namespace

std::string Type::str() const {
  std::string out;
  print(*this, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, Type t) { return os << t.str(); }

// ---------------------------------------------------------------------------
// Raw syntax and normalization

TypeExpr TypeExpr::atom(std::string name) {
  TypeExpr e;
  e.kind = TypeKind::Atom;
  e.name = std::move(name);
  return e;
}

TypeExpr TypeExpr::arrow(TypeExpr dom, TypeExpr cod) {
  TypeExpr e;
  e.kind = TypeKind::Arrow;
  e.children.push_back(std::move(dom));
  e.children.push_back(std::move(cod));
  return e;
}

TypeExpr TypeExpr::inter(TypeExpr l, TypeExpr r) {
  TypeExpr e;
  e.kind = TypeKind::Intersection;
  e.children.push_back(std::move(l));
  e.children.push_back(std::move(r));
  return e;
}

Type normalize(const TypeExpr& expr) {
  switch (expr.kind) {
    case TypeKind::Atom:
      return Type::atom(expr.name);
    case TypeKind::Arrow:
      return Type::arrow(normalize(expr.children[0]),
                         normalize(expr.children[1]));
    case TypeKind::Intersection:
      return Type::meet(normalize(expr.children[0]),
                        normalize(expr.children[1]));
  }
  return Type::top();
}

Type normalize(Type t) {
  switch (t.kind()) {
    case TypeKind::Atom:
      return t;
    case TypeKind::Arrow:
      return Type::arrow(normalize(t.domain()), normalize(t.codomain()));
    case TypeKind::Intersection: {
      std::vector<Type> parts;
      for (Type p : t.parts()) parts.push_back(normalize(p));
      return Type::meet(parts);
    }
  }
  return t;
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  TypeExpr parse() {
    TypeExpr t = type();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  TypeExpr type() {
    TypeExpr lhs = ity();
    skip_ws();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      TypeExpr rhs = type();
      return TypeExpr::arrow(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  TypeExpr ity() {
    TypeExpr lhs = bty();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        lhs = TypeExpr::inter(std::move(lhs), bty());
      } else {
        return lhs;
      }
    }
  }

  TypeExpr bty() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of type");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      TypeExpr inner = type();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return TypeExpr::atom(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("type syntax error: " + msg, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void check_atoms(const TypeExpr& e, const std::set<std::string>& constants) {
  if (e.kind == TypeKind::Atom) {
    if (e.name != kTopName && !constants.count(e.name))
      throw UnknownAtomError(e.name);
    return;
  }
  for (const auto& c : e.children) check_atoms(c, constants);
}

}  // namespace

TypeExpr parse_type_expr(std::string_view text) {
  return TypeParser(text).parse();
}

Type parse_type(std::string_view text, const std::set<std::string>& constants) {
  TypeExpr e = parse_type_expr(text);
  check_atoms(e, constants);
  return normalize(e);
}

void collect_subterms(Type t, std::vector<Type>& out) {
  out.push_back(t);
  switch (t.kind()) {
    case TypeKind::Atom:
      return;
    case TypeKind::Arrow:
      collect_subterms(t.domain(), out);
      collect_subterms(t.codomain(), out);
      return;
    case TypeKind::Intersection:
      for (Type p : t.parts()) collect_subterms(p, out);
      return;
  }
}

// ---------------------------------------------------------------------------
// Universes

TypeUniverse::TypeUniverse() : members_{Type::top()}, provenance_("{Top}") {
  index_.emplace(Type::top(), 0);
}

namespace {

std::vector<Type> sorted_unique(std::vector<Type> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TypeUniverse TypeUniverse::from_members(std::span<const Type> members,
                                        std::size_t width_bound,
                                        std::string provenance) {
  std::vector<Type> all{Type::top()};
  for (Type t : members) collect_subterms(t, all);
  TypeUniverse u;
  u.members_ = sorted_unique(std::move(all));
  u.index_.clear();
  for (std::size_t i = 0; i < u.members_.size(); ++i)
    u.index_.emplace(u.members_[i], i);
  u.width_bound_ = width_bound;
  u.provenance_ = std::move(provenance);
  return u;
}

std::optional<std::size_t> TypeUniverse::index_of(Type t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TypeUniverse TypeUniverse::restricted_to(
    const std::set<std::string>& atoms) const {
  std::vector<Type> keep;
  for (Type t : members_) {
    bool ok = true;
    for (Type a : t.atoms())
      if (!a.is_top() && !atoms.count(a.name())) ok = false;
    if (ok) keep.push_back(t);
  }
  return from_members(keep, width_bound_, provenance_ + " restricted");
}

TypeUniverse TypeUniverse::merged(const TypeUniverse& other) const {
  std::vector<Type> all(members_.begin(), members_.end());
  all.insert(all.end(), other.members_.begin(), other.members_.end());
  return from_members(all, std::max(width_bound_, other.width_bound_),
                      provenance_ + " + " + other.provenance_);
}

TypeUniverse subterm_closure(std::span<const Type> seed,
                             std::size_t width_bound, std::size_t cap) {
  if (width_bound < 1) throw PreconditionError("width_bound must be >= 1");
  TypeUniverse base = TypeUniverse::from_members(seed, width_bound, "");
  std::vector<Type> conj;
  for (Type t : base.members())
    if (!t.is_top()) conj.push_back(t);

  std::unordered_set<Type, Type::Hash> all(base.members().begin(),
                                           base.members().end());
  auto check_cap = [&] {
    if (all.size() > cap)
      throw ResourceError("universe exceeds cap of " + std::to_string(cap) +
                          " members");
  };
  check_cap();

  std::vector<Type> chosen;
  // Depth-first over index subsets of size 2..width_bound.
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() >= 2) {
      all.insert(Type::meet(chosen));
      check_cap();
    }
    if (chosen.size() == width_bound) return;
    for (std::size_t i = from; i < conj.size(); ++i) {
      chosen.push_back(conj[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);

  std::vector<Type> members(all.begin(), all.end());
  std::string prov = "subterm closure of " + std::to_string(seed.size()) +
                     " seed types, width " + std::to_string(width_bound);
  return TypeUniverse::from_members(members, width_bound, std::move(prov));
}

TypeUniverse enumerate_types(const std::set<std::string>& atoms,
                             std::size_t max_size, std::size_t cap) {
  std::vector<std::vector<Type>> by_size(max_size + 1);
  std::vector<Type> non_inter;  // atoms and arrows, grows with size
  std::size_t total = 0;
  auto add = [&](Type t) {
    by_size[t.size()].push_back(t);
    if (!t.is_intersection()) non_inter.push_back(t);
    if (++total > cap)
      throw ResourceError("type enumeration exceeds cap of " +
                          std::to_string(cap));
  };
  if (max_size >= 1) {
    add(Type::top());
    for (const auto& a : atoms)
      if (a != kTopName) add(Type::atom(a));
  }
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (std::size_t ds = 1; ds + 2 <= s; ++ds) {
      std::size_t cs = s - 1 - ds;
      for (Type d : by_size[ds])
        for (Type c : by_size[cs]) add(Type::arrow(d, c));
    }
    // Intersections whose normal form has size exactly s.
    std::vector<Type> pool;
    for (Type t : non_inter)
      if (t.size() + 2 <= s) pool.push_back(t);
    std::vector<Type> chosen;
    auto rec = [&](auto&& self, std::size_t from, std::size_t used) -> void {
      if (chosen.size() >= 2 && used == s) {
        add(Type::meet(chosen));
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        std::size_t extra = pool[i].size() + (chosen.empty() ? 0 : 1);
        if (used + extra > s) continue;
        chosen.push_back(pool[i]);
        self(self, i + 1, used + extra);
        chosen.pop_back();
      }
    };
    rec(rec, 0, 0);
  }
  std::vector<Type> all;
  for (auto& v : by_size) all.insert(all.end(), v.begin(), v.end());
  return TypeUniverse::from_members(
      all, 1, "all types of size <= " + std::to_string(max_size));
}

}  // namespace eitt
