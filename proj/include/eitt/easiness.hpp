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

#ifndef EITT_EASINESS_HPP
#define EITT_EASINESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eitt/filter_model.hpp"
#include "eitt/lambda.hpp"
#include "eitt/theory.hpp"
#include "eitt/types.hpp"

namespace eitt {

struct PointedTheory {
  Theory theory;
  Type point;
};

// Maps a pointed theory to a conservative extension of its theory.
struct FilterScheme {
  std::string name;
  std::function<Theory(const PointedTheory&)> extend;
};

struct TypePredicate {
  std::string name;
  std::function<bool(Type)> holds;
};

// Cantor pairing <r,s> = (r+s)(r+s+1)/2 + s, a bijection N x N -> N with
// <r,s> >= r.
struct Pairing {
  static std::uint64_t encode(std::uint64_t r, std::uint64_t s);
  static std::pair<std::uint64_t, std::uint64_t> decode(std::uint64_t n);
};

// The witness consumed by step n -> n+1, with n = <r,s>.
struct StageWitness {
  std::size_t n;
  std::uint64_t r;
  std::uint64_t s;
  Type type;
};

struct StagePlan {
  std::vector<Theory> stages;
  std::vector<StageWitness> witnesses;  // witnesses[n] builds stages[n+1]
  TypePredicate predicate;
  std::size_t width_bound = 1;

  const Theory& final_stage() const { return stages.back(); }
};

// Whether `sample` judgements over old types get the same answer in both
// theories. Throws PreconditionError unless old's constants are among
// new's and the sample only mentions old constants.
bool conservativity_check(const Theory& old_th, const Theory& new_th,
                          std::span<const Judgement> sample);
// Every ordered pair of members of u.
std::vector<Judgement> all_judgements(const TypeUniverse& u);

// psiK for the least K not already a constant.
std::string fresh_atom(const Theory& th);

// Extends the theory with a fresh atom psi and the axiom psi ~ psi -> Z.
// Throws ValidationError if the result is not an eitt.
Theory dd_scheme(const PointedTheory& p);
FilterScheme dd_filter_scheme();

// For every B in u:
//   new |- e : B   iff   C & z <= B (in new) for some C with old |- e : C.
// C ranges over meets of members of u over old's constants; taking the
// meet of all such C found for e suffices. Inference on both sides is
// bounded by u and depth.
bool simple_easiness_check(const Term& e, const Theory& old_th,
                           const Theory& new_th, Type z, const TypeUniverse& u,
                           std::size_t depth = kDefaultDepth);

// [[e]] in new equals up(z) joined with [[e]] in old.
bool theorem4_check(const Term& e, const Theory& old_th, const Theory& new_th,
                    Type z, const TypeUniverse& u,
                    std::size_t depth = kDefaultDepth);

// up(meet {A in u | p(A)}), up(Top) if nothing satisfies p.
Filter predicate_filter(const Theory& th, const TypePredicate& p,
                        const TypeUniverse& u);

// D-infinity as the base stage, named "stage0".
Theory base_stage();

// Candidate witnesses at stage r: the members of the stage universe, plus
// A -> B -> A & B for A, B in it, that satisfy p and mention a constant
// outside `previous` (every candidate is new when previous is nullopt).
// Sorted in canonical type order.
std::vector<Type> witness_candidates(const Theory& stage,
                                     const std::optional<Theory>& previous,
                                     const TypePredicate& p,
                                     std::size_t width_bound);

// stages[0] = D-infinity; stages[n+1] = scheme(stages[n], W) where, for
// n = <r,s>, W is the s-th candidate at stage r. Produces `stages`
// theories. Throws ResourceError if the candidates at some stage run out.
StagePlan run_construction(const Term& e, const FilterScheme& scheme,
                           const TypePredicate& p, std::size_t stages,
                           std::size_t width_bound);

// Subterm closure (to the plan's width) of the final stage's axioms and
// `extra`; restrict it to a stage's constants for per-stage checks.
TypeUniverse plan_universe(const StagePlan& plan, std::span<const Type> extra);

struct StageCheck {
  std::size_t stage;
  bool pass;
  std::string detail;
};

// [[e]] at stage n is generated by the meet of witnesses[m], m < n.
std::vector<StageCheck> stage_interpretation_report(const StagePlan& plan,
                                                    const Term& e,
                                                    const TypeUniverse& u,
                                                    std::size_t depth = kDefaultDepth);
bool stage_interpretation_check(const StagePlan& plan, const Term& e,
                                const TypeUniverse& u,
                                std::size_t depth = kDefaultDepth);

// (w -> w) -> w -> w, which separates i from k.
Type separating_type();

// At every stage: D in [[i]], D not in [[k]], and w -> w not <= w.
std::vector<StageCheck> nontriviality_report(const StagePlan& plan,
                                             const TypeUniverse& u,
                                             std::size_t depth = kDefaultDepth);
bool nontriviality_check(const StagePlan& plan, const TypeUniverse& u,
                         std::size_t depth = kDefaultDepth);

// Lines "n r s witness", preceded by a comment header.
std::string plan_manifest(const StagePlan& plan);
// Writes stage<n>.eitt for every stage and manifest.txt into `dir`.
void save_plan(const StagePlan& plan, const std::string& dir);

}  // namespace eitt

#endif  // EITT_EASINESS_HPP
