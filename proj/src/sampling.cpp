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

#include "eitt/sampling.hpp"

#include "eitt/errors.hpp"

namespace eitt {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

Type gen_type(const std::vector<std::string>& atoms, std::size_t size,
              std::mt19937_64& rng) {
  if (size < 3) {
    std::size_t i = pick(rng, atoms.size() + 1);
    return i == atoms.size() ? Type::top() : Type::atom(atoms[i]);
  }
  // Arrows twice as likely as meets; a leaf now and then keeps shapes mixed.
  const std::size_t shape = pick(rng, 5);
  if (shape == 0) return gen_type(atoms, 1, rng);
  const std::size_t left = 1 + pick(rng, size - 2);
  Type a = gen_type(atoms, left, rng);
  Type b = gen_type(atoms, size - 1 - left, rng);
  return shape == 4 ? Type::meet(a, b) : Type::arrow(a, b);
}

const char* const kBinders[] = {"x", "y", "z", "u", "v"};

Term gen_term(std::vector<std::string>& scope,
              const std::vector<std::string>& free, std::size_t size,
              std::mt19937_64& rng) {
  const std::size_t vars = scope.size() + free.size();
  if (size < 2 || (size == 2 && vars > 0)) {
    if (vars == 0) return Term::abs("x", Term::var("x"));
    std::size_t i = pick(rng, vars);
    return Term::var(i < scope.size() ? scope[i] : free[i - scope.size()]);
  }
  if (size == 2 || pick(rng, 2) == 0) {
    const std::string x = kBinders[pick(rng, std::size(kBinders))];
    scope.push_back(x);
    Term body = gen_term(scope, free, size - 1, rng);
    scope.pop_back();
    return Term::abs(x, body);
  }
  const std::size_t left = 1 + pick(rng, size - 2);
  Term f = gen_term(scope, free, left, rng);
  Term a = gen_term(scope, free, size - 1 - left, rng);
  return Term::app(f, a);
}

}  // namespace

Type random_type(const std::vector<std::string>& atoms, std::size_t max_size,
                 std::mt19937_64& rng) {
  if (max_size == 0) throw PreconditionError("max_size must be >= 1");
  return gen_type(atoms, 1 + pick(rng, max_size), rng);
}

Term random_term(const std::vector<std::string>& free, std::size_t max_size,
                 std::mt19937_64& rng) {
  if (max_size == 0) throw PreconditionError("max_size must be >= 1");
  std::vector<std::string> scope;
  return gen_term(scope, free, 1 + pick(rng, max_size), rng);
}

}  // namespace eitt
