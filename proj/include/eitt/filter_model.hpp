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

#ifndef EITT_FILTER_MODEL_HPP
#define EITT_FILTER_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eitt/assignment.hpp"
#include "eitt/lambda.hpp"
#include "eitt/theory.hpp"
#include "eitt/types.hpp"

namespace eitt {

// The principal filter up(generator) = {A | generator <= A}. Two filters
// are equal iff their generators are equivalent.
class Filter {
 public:
  Filter(Theory th, Type generator);
  static Filter bottom(Theory th);  // up(Top)

  const Theory& theory() const { return th_; }
  Type generator() const { return gen_; }

  bool member(Type a) const;
  // Throws TheoryMismatchError.
  bool equals(const Filter& other) const;
  // up(g) is a subset of up(g') iff g' <= g.
  bool subset_of(const Filter& other) const;
  // up(meet of the members of u in this filter).
  Filter restricted(const TypeUniverse& u) const;

  std::string str() const;  // up(<generator>)

 private:
  Theory th_;
  Type gen_;
};

bool member(const Filter& f, Type a);
// Least filter containing both: up(g & g').
Filter join(const Filter& f, const Filter& g);
// X . Y = {B | exists A in Y. A -> B in X}, exact for principal filters.
Filter apply(const Filter& f, const Filter& g);
// The application restricted to u: up(meet {D in u | gen_f <= gen_g -> D}).
Filter apply(const Filter& f, const Filter& g, const TypeUniverse& u);

// Term environment; unbound variables denote up(Top).
class Env {
 public:
  Env() = default;
  Env& bind(const std::string& x, Filter f);
  const std::map<std::string, Filter>& bindings() const { return bindings_; }
  // The strongest basis satisfying the environment.
  Basis basis() const;
  std::string str() const;  // [x := up(A), ...]

 private:
  std::map<std::string, Filter> bindings_;
};

inline constexpr std::size_t kDefaultDepth = 64;

// Interpretation of terms over one theory and universe. Keeps its
// inference memo across calls.
class Model {
 public:
  Model(Theory th, TypeUniverse u, std::size_t depth = kDefaultDepth,
        InferLimits limits = {});

  const Theory& theory() const { return inf_.theory(); }
  const TypeUniverse& universe() const { return inf_.universe(); }
  std::size_t depth() const { return depth_; }
  Inferencer& inferencer() { return inf_; }

  Filter interp(const Term& t, const Env& env);
  Filter filter(Type a) const { return Filter(inf_.theory(), a); }

 private:
  Inferencer inf_;
  std::size_t depth_;
};

// [[t]]env over u: the filter generated by the inferred generator.
Filter interp(const Theory& th, const Term& t, const Env& env,
              const TypeUniverse& u, std::size_t depth = kDefaultDepth);

struct LawResult {
  std::string law;  // LAW1..LAW6, EXT
  std::string term;
  std::string env;
  bool pass;
  std::string detail;  // empty on PASS
};

struct LawsReport {
  std::vector<LawResult> results;
  bool all_pass() const;
  std::size_t failures() const;
  // One line per result: LAW<k> <term> <env> PASS|FAIL
  std::string str() const;
};

struct LawsOptions {
  std::size_t depth = kDefaultDepth;
  // Principal filters tried per sample for the laws quantified over them.
  std::size_t probes = 4;
  std::uint64_t seed = 1;
};

// The lambda-model laws on each (term, env) sample:
//   LAW1  [[x]]r = r(x)
//   LAW2  [[t s]]r = [[t]]r . [[s]]r
//   LAW3  [[\x.t]]r . X = [[t]]r[x := X]
//   LAW4  r and r' agreeing on FV(t) give the same [[t]]
//   LAW5  [[\x.t]]r = [[\y.t[x := y]]]r for y not free in t
//   LAW6  [[t]]r[x := X] = [[t']]r[x := X] for all X in u implies
//         [[\x.t]]r = [[\x.t']]r
//   EXT   [[\x.t x]]r = [[t]]r for x not free in t
// X ranges over principal filters with generators in u.
LawsReport model_laws_suite(Model& model,
                            std::span<const std::pair<Term, Env>> samples,
                            LawsOptions options = {});
LawsReport model_laws_suite(const Theory& th,
                            std::span<const std::pair<Term, Env>> samples,
                            const TypeUniverse& u, LawsOptions options = {});

}  // namespace eitt

#endif  // EITT_FILTER_MODEL_HPP
