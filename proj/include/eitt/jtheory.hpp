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

#ifndef EITT_JTHEORY_HPP
#define EITT_JTHEORY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eitt/easiness.hpp"
#include "eitt/lambda.hpp"
#include "eitt/types.hpp"

namespace eitt {

// c is syntactically A -> B -> A & B (on normal forms).
bool join_predicate(Type c);
TypePredicate join_type_predicate();  // named "join"

struct JEquation {
  std::string name;  // idempotence, commutativity, associativity
  Term lhs;
  Term rhs;
};

// ΔΔ x x = x,  ΔΔ x y = ΔΔ y x,  ΔΔ x (ΔΔ y z) = ΔΔ (ΔΔ x y) z
std::vector<JEquation> j_equations();

struct RunConfig {
  std::size_t stages = 4;  // index of the final stage: stage0 .. stage<stages>
  std::vector<Type> universe_seed;  // added to the final stage's axioms
  std::size_t width_bound = 2;
  std::size_t depth = kDefaultDepth;
  std::size_t samples = 50;
  std::uint64_t seed = 1;

  // Throws PreconditionError unless every count is >= 1.
  void validate() const;
};

struct JReport {
  std::vector<std::string> lines;
  std::size_t checks = 0;
  std::size_t failures = 0;

  bool consistent() const { return checks > 0 && failures == 0; }
  // The lines, then the verdict: "CONSISTENT (evidence)" or
  // "NOT ESTABLISHED (<k> of <n> checks failed)".
  std::string str() const;
};

// Builds the join-predicate plan for ΔΔ and checks, at its final stage:
// each equation on `samples` random principal environments for x, y, z;
// [[ΔΔ]] . up(A) . up(B) = up(A & B) for every pair of universe members;
// and non-triviality at every stage. The same config gives the same report.
JReport verify_j(const RunConfig& cfg);

}  // namespace eitt

#endif  // EITT_JTHEORY_HPP
