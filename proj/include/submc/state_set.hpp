/*
 * Copyright 2026 The submc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace submc {

using StateIndex = std::size_t;

/// Subset of the states of one model, stored as a bit vector over the
/// model's state indices. Two sets only compare equal when their universes
/// agree.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe, bool full = false)
      : bits_(universe, full) {}
  StateSet(std::size_t universe, std::initializer_list<StateIndex> members);

  static StateSet full(std::size_t universe) { return StateSet(universe, true); }

  std::size_t universe() const { return bits_.size(); }
  bool contains(StateIndex s) const { return s < bits_.size() && bits_[s]; }
  void insert(StateIndex s) { bits_.at(s) = true; }
  void erase(StateIndex s) { bits_.at(s) = false; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<StateIndex> elements() const;
  bool subset_of(const StateSet& other) const;

  StateSet complement() const;
  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  StateSet& operator-=(const StateSet& other);

  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }
  friend bool operator==(const StateSet&, const StateSet&) = default;
  friend bool operator<(const StateSet& a, const StateSet& b) {
    return a.bits_ < b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

}  // namespace submc
