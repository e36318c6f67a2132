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

#ifndef EITT_TESTS_GENERATION_HPP
#define EITT_TESTS_GENERATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "eitt/assignment.hpp"

namespace eitt::testing {

// Checks the inversion clause for the root of t against every A in the
// universe with A not ~ Top:
//   x      A found  iff  x:B in the basis and B <= A
//   t s    A found  iff  t : B -> A and s : B for some B in u or B = g_s
//   \x.t   A found  iff  the meet of all B -> C (B, C in u, x:B |- t : C)
//                        is below A
//   \x.t   B -> C found  iff  x:B |- t : C
// Subterms are queried at depth - 1. Returns one message per violation.
std::vector<std::string> generation_violations(Inferencer& inf,
                                               const Basis& basis,
                                               const Term& t,
                                               std::size_t depth);

}  // namespace eitt::testing

#endif  // EITT_TESTS_GENERATION_HPP
