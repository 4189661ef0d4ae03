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

#include "submc/state_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace submc {

StateSet::StateSet(std::size_t universe,
                   std::initializer_list<StateIndex> members)
    : bits_(universe, false) {
  for (StateIndex s : members) insert(s);
}

std::size_t StateSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<StateIndex> StateSet::elements() const {
  std::vector<StateIndex> out;
  for (StateIndex s = 0; s < bits_.size(); ++s)
    if (bits_[s]) out.push_back(s);
  return out;
}

bool StateSet::subset_of(const StateSet& other) const {
  for (StateIndex s = 0; s < bits_.size(); ++s)
    if (bits_[s] && !other.contains(s)) return false;
  return true;
}

StateSet StateSet::complement() const {
  StateSet out(universe());
  for (StateIndex s = 0; s < bits_.size(); ++s) out.bits_[s] = !bits_[s];
  return out;
}

static void check_universe(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("StateSet universes differ");
}

StateSet& StateSet::operator|=(const StateSet& other) {
  check_universe(universe(), other.universe());
  for (StateIndex s = 0; s < bits_.size(); ++s)
    bits_[s] = bits_[s] || other.bits_[s];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  check_universe(universe(), other.universe());
  for (StateIndex s = 0; s < bits_.size(); ++s)
    bits_[s] = bits_[s] && other.bits_[s];
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& other) {
  check_universe(universe(), other.universe());
  for (StateIndex s = 0; s < bits_.size(); ++s)
    bits_[s] = bits_[s] && !other.bits_[s];
  return *this;
}

}  // namespace submc
