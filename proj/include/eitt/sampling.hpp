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

#ifndef EITT_SAMPLING_HPP
#define EITT_SAMPLING_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "eitt/lambda.hpp"
#include "eitt/types.hpp"

namespace eitt {

// Reproducible random generators. Only mt19937_64 output is consumed, and
// always through `rng() % n`, so a seed fixes the result on every platform.

// A normalized type over `atoms` (Top is always eligible) whose syntax
// tree, before normalization, has at most max_size nodes.
Type random_type(const std::vector<std::string>& atoms, std::size_t max_size,
                 std::mt19937_64& rng);

// A term of at most max_size nodes (2 when it must be closed and max_size
// is 1). Variables are drawn from the enclosing
// binders and from `free`; binders are named x, y, z, u, v.
Term random_term(const std::vector<std::string>& free, std::size_t max_size,
                 std::mt19937_64& rng);

}  // namespace eitt

#endif  // EITT_SAMPLING_HPP
