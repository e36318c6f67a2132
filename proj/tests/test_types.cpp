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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "eitt/errors.hpp"
#include "eitt/sampling.hpp"
#include "eitt/types.hpp"

namespace eitt {
namespace {

const std::set<std::string> kD0{"w"};
const std::set<std::string> kABC{"A", "B", "C"};

Type A() { return Type::atom("A"); }
Type B() { return Type::atom("B"); }
Type C() { return Type::atom("C"); }
Type w() { return Type::atom("w"); }

std::set<Type> as_set(const TypeUniverse& u) {
  return {u.members().begin(), u.members().end()};
}

TEST(ParseType, ArrowOverD0) {
  EXPECT_EQ(parse_type("Top -> w", kD0), Type::arrow(Type::top(), w()));
}

TEST(ParseType, MeetOfArrows) {
  Type t = parse_type("(A->B) & (A->C)", kABC);
  ASSERT_TRUE(t.is_intersection());
  EXPECT_EQ(t, Type::meet(Type::arrow(A(), B()), Type::arrow(A(), C())));
  EXPECT_EQ(t.parts().size(), 2u);
}

TEST(ParseType, IdempotentMeetCollapses) {
  EXPECT_EQ(parse_type("A & A", kABC), A());
}

TEST(ParseType, MeetBindsTighterThanArrow) {
  EXPECT_EQ(parse_type("A & B -> C", kABC),
            Type::arrow(Type::meet(A(), B()), C()));
  EXPECT_EQ(parse_type("A -> B -> C", kABC),
            Type::arrow(A(), Type::arrow(B(), C())));
}

TEST(ParseType, SyntaxErrorCarriesPosition) {
  try {
    parse_type("A -> (B", kABC);
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW(parse_type("", kABC), SyntaxError);
  EXPECT_THROW(parse_type("A &", kABC), SyntaxError);
  EXPECT_THROW(parse_type("A B", kABC), SyntaxError);
}

TEST(ParseType, UnknownAtomIsNamed) {
  try {
    parse_type("A -> q", kABC);
    FAIL() << "expected UnknownAtomError";
  } catch (const UnknownAtomError& e) {
    EXPECT_EQ(e.name(), "q");
  }
}

TEST(Normalize, FlattensAndDeduplicates) {
  auto e = TypeExpr::inter(TypeExpr::inter(TypeExpr::atom("A"), TypeExpr::atom("B")),
                           TypeExpr::atom("A"));
  EXPECT_EQ(normalize(e), Type::meet(A(), B()));
  EXPECT_EQ(normalize(e).parts().size(), 2u);
}

TEST(Normalize, Associativity) {
  auto l = TypeExpr::inter(TypeExpr::atom("A"),
                           TypeExpr::inter(TypeExpr::atom("B"), TypeExpr::atom("C")));
  auto r = TypeExpr::inter(TypeExpr::inter(TypeExpr::atom("A"), TypeExpr::atom("B")),
                           TypeExpr::atom("C"));
  EXPECT_EQ(normalize(l), normalize(r));
  EXPECT_EQ(normalize(l).parts().size(), 3u);
}

TEST(Normalize, IdempotenceUnderArrow) {
  auto e = TypeExpr::arrow(TypeExpr::atom("A"),
                           TypeExpr::inter(TypeExpr::atom("B"), TypeExpr::atom("B")));
  EXPECT_EQ(normalize(e), Type::arrow(A(), B()));
}

TEST(Normalize, CommutativityGivesOneNode) {
  EXPECT_EQ(Type::meet(A(), B()), Type::meet(B(), A()));
  EXPECT_EQ(Type::meet(A(), B()).id(), Type::meet(B(), A()).id());
}

TEST(SubtermClosure, SubtermsOnly) {
  const Type t = Type::arrow(Type::top(), w());
  std::vector<Type> seed{t};
  EXPECT_EQ(as_set(subterm_closure(seed, 1)),
            (std::set<Type>{Type::top(), w(), t}));
}

TEST(SubtermClosure, OnePairwiseMeet) {
  std::vector<Type> seed{A(), B()};
  EXPECT_EQ(as_set(subterm_closure(seed, 2)),
            (std::set<Type>{Type::top(), A(), B(), Type::meet(A(), B())}));
}

TEST(SubtermClosure, SeparatingType) {
  const Type ww = Type::arrow(w(), w());
  const Type d = Type::arrow(ww, ww);
  std::vector<Type> seed{d};
  EXPECT_EQ(as_set(subterm_closure(seed, 1)),
            (std::set<Type>{Type::top(), w(), ww, d}));
}

TEST(SubtermClosure, CapRaisesResourceError) {
  std::vector<Type> seed;
  for (int i = 0; i < 12; ++i) seed.push_back(Type::atom("a" + std::to_string(i)));
  EXPECT_THROW(subterm_closure(seed, 4, 100), ResourceError);
  EXPECT_THROW(subterm_closure(seed, 0), PreconditionError);
}

// Normal-form-preserving random expressions: a raw tree with repeated and
// nested meets.
TypeExpr random_expr(std::mt19937_64& rng, int depth) {
  static const char* names[] = {"Top", "w", "A", "B"};
  if (depth == 0 || rng() % 4 == 0) return TypeExpr::atom(names[rng() % 4]);
  TypeExpr l = random_expr(rng, depth - 1), r = random_expr(rng, depth - 1);
  return rng() % 2 ? TypeExpr::arrow(l, r) : TypeExpr::inter(l, r);
}

void expr_atoms(const TypeExpr& e, std::set<std::string>& out) {
  if (e.kind == TypeKind::Atom) out.insert(e.name);
  for (const auto& c : e.children) expr_atoms(c, out);
}

TEST(NormalizeProperty, IdempotentAndAtomPreserving) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    TypeExpr e = random_expr(rng, 5);
    Type t = normalize(e);
    EXPECT_EQ(normalize(t), t);
    std::set<std::string> want;
    expr_atoms(e, want);
    std::set<std::string> got;
    for (Type a : t.atoms()) got.insert(a.name());
    EXPECT_EQ(got, want);
    EXPECT_EQ(normalize(parse_type_expr(t.str())), t);
  }
}

TEST(TypeProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> atoms{"w", "psi0", "psi1"};
  const std::set<std::string> consts(atoms.begin(), atoms.end());
  for (int i = 0; i < 1000; ++i) {
    Type t = random_type(atoms, 15, rng);
    const std::string s = t.str();
    Type back = parse_type(s, consts);
    ASSERT_EQ(back, t) << s;
    EXPECT_EQ(back.str(), s);
  }
}

TEST(SubtermClosureProperty, ClosedUnderSubterms) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    std::vector<Type> seed;
    for (int j = 0; j < 3; ++j) seed.push_back(random_type({"w", "p"}, 9, rng));
    TypeUniverse u = subterm_closure(seed, 1 + i % 3);
    EXPECT_TRUE(u.contains(Type::top()));
    for (Type s : seed) EXPECT_TRUE(u.contains(s));
    for (Type m : u.members()) {
      std::vector<Type> subs;
      collect_subterms(m, subs);
      for (Type s : subs) EXPECT_TRUE(u.contains(s)) << s << " in " << m;
    }
  }
}

TEST(EnumerateTypes, AllSmallNormalForms) {
  // Size-3 forms over {Top, w}: 2 atoms, 4 arrows, the one meet Top & w.
  TypeUniverse u = enumerate_types({"w"}, 3);
  EXPECT_EQ(u.size(), 7u);
  for (Type m : u.members()) EXPECT_LE(m.size(), 3u);
}

}  // namespace
}  // namespace eitt
