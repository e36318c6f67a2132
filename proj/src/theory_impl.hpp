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

#ifndef EITT_SRC_THEORY_IMPL_HPP
#define EITT_SRC_THEORY_IMPL_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eitt/theory.hpp"

namespace eitt::detail {

struct GoalHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& g)
      const noexcept {
    return std::hash<std::uint64_t>{}(g.first * 0x9E3779B97F4A7C15ull ^
                                      g.second);
  }
};

// Definitive subtype results. Results that depended on a goal still in
// progress higher up the stack are never stored.
class SubtypeMemo {
 public:
  std::optional<bool> lookup(Type a, Type b) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find({a.id(), b.id()});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void store(Type a, Type b, bool value);

  std::size_t size() {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.size();
  }

  void set_cap(std::size_t cap) {
    std::lock_guard<std::mutex> lock(mutex_);
    cap_ = cap;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, GoalHash>
      table_;
  std::size_t cap_ = SubtypeLimits{}.memo_cap;
};

struct TheoryImpl {
  std::string name;
  std::vector<std::string> atoms;
  std::set<std::string> atom_set;
  std::vector<Theory::OrderAxiom> order;
  std::vector<std::pair<std::string, Type>> arrows;

  std::map<std::string, Type> bodies;
  std::map<std::string, std::set<std::string>> up;
  // Arrow conjuncts an atom is below: its own body's and those of every
  // atom above it in the order closure.
  std::map<std::string, std::vector<Type>> expansion;

  SubtypeMemo memo;
};

}  // namespace eitt::detail

#endif  // EITT_SRC_THEORY_IMPL_HPP
