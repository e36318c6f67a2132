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

#include <algorithm>
#include <random>

#include "eitt/assignment.hpp"
#include "eitt/easiness.hpp"
#include "eitt/errors.hpp"
#include "eitt/sampling.hpp"
#include "generation.hpp"

namespace eitt {
namespace {

using namespace combinators;

Type w() { return Type::atom("w"); }
Type top() { return Type::top(); }
Type arr(Type a, Type b) { return Type::arrow(a, b); }
Type ww() { return arr(w(), w()); }
Type dsep() { return arr(ww(), ww()); }

TypeUniverse universe_with(std::vector<Type> extra, std::size_t width = 1) {
  return subterm_closure(extra, width);
}

bool contains(const std::vector<Type>& s, Type a) {
  return std::find(s.begin(), s.end(), a) != s.end();
}

TEST(CheckDerivation, AxTopOnOmegaTerm) {
  Derivation d{Rule::AxTop, {}, delta_delta(), top(), {}, std::nullopt};
  EXPECT_TRUE(check_derivation(dinf_theory(), d));
}

TEST(CheckDerivation, IdentityAtWArrowW) {
  Derivation ax{Rule::Ax, Basis{{"x", w()}}, Term::var("x"), w(), {}, std::nullopt};
  Derivation d{Rule::ArrowIntro, {}, i(), ww(), {ax}, std::nullopt};
  EXPECT_TRUE(check_derivation(dinf_theory(), d));
  EXPECT_EQ(serialize(d),
            "[->I] {} |- \\x.x : w -> w\n  [ax] {x: w} |- x : w\n");
}

TEST(CheckDerivation, MismatchedArgumentIsRejected) {
  // i : w -> w applied to k : Top, concluding w
  Derivation ax{Rule::Ax, Basis{{"x", w()}}, Term::var("x"), w(), {}, std::nullopt};
  Derivation fi{Rule::ArrowIntro, {}, i(), ww(), {ax}, std::nullopt};
  Derivation ak{Rule::AxTop, {}, k(), top(), {}, std::nullopt};
  Derivation d{Rule::ArrowElim, {}, Term::app(i(), k()), w(), {fi, ak}, std::nullopt};
  CheckResult r = check_derivation(dinf_theory(), d);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.node, "root");
}

TEST(CheckDerivation, BadSideConditionNamesNode) {
  // w -> w <= w fails in the D-infinity theory
  Derivation ax{Rule::Ax, Basis{{"x", ww()}}, Term::var("x"), ww(), {}, std::nullopt};
  Derivation sub{Rule::Sub, Basis{{"x", ww()}}, Term::var("x"), w(), {ax},
                 Judgement{ww(), w()}};
  Derivation d{Rule::ArrowIntro, {}, i(), arr(ww(), w()), {sub}, std::nullopt};
  CheckResult r = check_derivation(dinf_theory(), d);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.node, "root.0");
}

TEST(Infer, IdentityHasSeparatingType) {
  auto s = infer(dinf_theory(), {}, i(), universe_with({dsep()}), 3);
  EXPECT_TRUE(contains(s, dsep()));
}

TEST(Infer, KHasNotSeparatingType) {
  auto s = infer(dinf_theory(), {}, k(), universe_with({dsep()}), 5);
  EXPECT_FALSE(contains(s, dsep()));
  EXPECT_TRUE(contains(s, top()));
}

TEST(Infer, VariableIsUpSetOfItsType) {
  const Theory d0 = dinf_theory();
  const TypeUniverse u = enumerate_types({"w"}, 5);
  auto s = infer(d0, Basis{{"x", w()}}, Term::var("x"), u, 1);
  std::vector<Type> want;
  for (Type a : u.members())
    if (subtype(d0, w(), a)) want.push_back(a);
  std::sort(s.begin(), s.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(s, want);
}

TEST(Infer, OmegaTermInExtensionWithCertificate) {
  const Theory ext = dd_scheme({dinf_theory(), w()});
  const Type psi = Type::atom("psi0");
  Inferencer inf(ext, universe_with({psi, arr(psi, w()), w()}));
  EXPECT_TRUE(contains(inf.infer({}, delta_delta(), 4), w()));
  auto d = inf.certify({}, delta_delta(), w(), 4);
  ASSERT_TRUE(d);
  CheckResult r = check_derivation(ext, *d);
  EXPECT_TRUE(r) << r.node << ": " << r.message << "\n" << serialize(*d);
  EXPECT_FALSE(infer(dinf_theory(), {}, delta_delta(), universe_with({w()}), 4)
                   .size() > 1);
}

TEST(Infer, BudgetExhaustionThrows) {
  Inferencer inf(dinf_theory(), enumerate_types({"w"}, 7), InferLimits{50});
  EXPECT_THROW(inf.infer({}, parse_term("\\x y z.x (y z) (z y)"), 8),
               ResourceError);
}

TEST(IntersectionElim, Examples) {
  const Theory d0 = dinf_theory();
  const TypeUniverse u = universe_with({Type::meet(ww(), arr(top(), top()))}, 2);
  EXPECT_TRUE(intersection_elim_check(d0, {}, i(), ww(), arr(top(), top()), u, 3));
  EXPECT_TRUE(contains(infer(d0, {}, i(), u, 3), Type::meet(ww(), arr(top(), top()))));
  EXPECT_TRUE(intersection_elim_check(d0, {}, i(), ww(), ww(), u, 3));
  EXPECT_TRUE(intersection_elim_check(d0, {}, i(), ww(), top(), u, 3));
}

struct Sample {
  Term term;
  Basis basis;
};

std::vector<Sample> samples(const TypeUniverse& u, std::size_t n,
                            std::uint64_t seed, std::size_t term_size) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  for (std::size_t k = 0; k < n; ++k) {
    Term t = random_term({"x", "y"}, term_size, rng);
    std::map<std::string, Type> b;
    for (const auto& x : t.free_vars())
      if (rng() % 4 != 0) b.emplace(x, u[rng() % u.size()]);
    out.push_back({t, Basis(std::move(b))});
  }
  return out;
}

TEST(InferProperty, GenerationClauses) {
  const Theory d0 = dinf_theory();
  const TypeUniverse u = enumerate_types({"w"}, 6);
  Inferencer inf(d0, u);
  for (const auto& s : samples(u, 30, 41, 7)) {
    auto v = testing::generation_violations(inf, s.basis, s.term, 5);
    EXPECT_TRUE(v.empty()) << s.term << " " << s.basis.str() << ": " << v.front();
  }
}

TEST(InferProperty, EveryInferredTypeIsCertified) {
  const Theory th = dd_scheme({dinf_theory(), w()});
  const TypeUniverse u = enumerate_types(th.atom_set(), 3);
  Inferencer inf(th, u);
  for (const auto& s : samples(u, 25, 5, 7)) {
    for (Type a : inf.infer(s.basis, s.term, 5)) {
      auto d = inf.certify(s.basis, s.term, a, 5);
      ASSERT_TRUE(d) << s.term << " : " << a;
      CheckResult r = check_derivation(th, *d);
      ASSERT_TRUE(r) << s.term << " : " << a << " at " << r.node << ": "
                     << r.message;
    }
  }
}

TEST(InferProperty, MonotoneInUniverseAndDepth) {
  const Theory d0 = dinf_theory();
  const TypeUniverse small = enumerate_types({"w"}, 3);
  const TypeUniverse big = enumerate_types({"w"}, 5);
  Inferencer a(d0, small), b(d0, big);
  for (const auto& s : samples(small, 30, 8, 7)) {
    for (std::size_t d = 1; d <= 5; ++d) {
      auto lo = a.infer(s.basis, s.term, d);
      auto hi_u = b.infer(s.basis, s.term, d);
      auto hi_d = a.infer(s.basis, s.term, d + 1);
      for (Type t : lo) {
        EXPECT_TRUE(contains(hi_u, t)) << s.term << " : " << t;
        EXPECT_TRUE(contains(hi_d, t)) << s.term << " : " << t;
      }
    }
  }
}

TEST(InferProperty, UpwardAndMeetClosedWithinUniverse) {
  const Theory d0 = dinf_theory();
  const TypeUniverse u = enumerate_types({"w"}, 5);
  Inferencer inf(d0, u);
  for (const auto& s : samples(u, 30, 12, 7)) {
    auto got = inf.infer(s.basis, s.term, 5);
    for (Type a : got)
      for (Type b : u.members()) {
        if (subtype(d0, a, b)) EXPECT_TRUE(contains(got, b));
        Type m = Type::meet(a, b);
        if (contains(got, b) && u.contains(m)) EXPECT_TRUE(contains(got, m));
      }
  }
}

}  // namespace
}  // namespace eitt
