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

/// \file icgs.hpp
/// \brief Concurrent game structures with imperfect information.
///
/// An Icgs is built once through IcgsBuilder, which validates it, and is
/// read-only afterwards except for the labelling: atoms may be added and
/// states relabelled, which is how the verification procedure records
/// sub-formula results. Every enumeration follows index order, and indices
/// follow declaration order.
#pragma once

#include <compare>
#include <cstdint>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "submc/state_set.hpp"

namespace submc {

using AgentIndex = std::size_t;
using ActionIndex = std::size_t;
using AtomIndex = std::size_t;

struct Agent {
  std::string name;
  std::vector<std::string> actions;
};

/// One action per agent, in agent-index order; entry i indexes Act_i.
struct JointAction {
  std::vector<ActionIndex> choice;
  friend auto operator<=>(const JointAction&, const JointAction&) = default;
};

/// Unordered pair of distinct states, stored with first < second.
struct StatePair {
  StateIndex first;
  StateIndex second;
  friend auto operator<=>(const StatePair&, const StatePair&) = default;
};

class IcgsBuilder;

class Icgs {
 public:
  /// Empty placeholder; only IcgsBuilder produces usable models.
  Icgs() = default;

  std::size_t num_agents() const { return agents_.size(); }
  const Agent& agent(AgentIndex i) const { return agents_.at(i); }
  std::optional<AgentIndex> find_agent(std::string_view name) const;
  /// Like find_agent, but throws NameError.
  AgentIndex agent_index(std::string_view name) const;

  std::size_t num_states() const { return states_.size(); }
  const std::string& state_name(StateIndex s) const { return states_.at(s); }
  std::optional<StateIndex> find_state(std::string_view name) const;
  StateIndex state_index(std::string_view name) const;
  StateIndex initial() const { return initial_; }

  std::size_t num_atoms() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::optional<AtomIndex> find_atom(std::string_view name) const;

  /// d(i, s), sorted by action index.
  const std::vector<ActionIndex>& protocol(AgentIndex i, StateIndex s) const {
    return protocol_.at(i).at(s);
  }

  /// Enabled joint actions at s are numbered in mixed radix over the
  /// protocol sets, agent 0 most significant.
  std::size_t num_joint_actions(StateIndex s) const { return delta_.at(s).size(); }
  JointAction joint_action(StateIndex s, std::size_t index) const;
  std::optional<std::size_t> joint_index(StateIndex s, const JointAction& a) const;
  StateIndex successor(StateIndex s, std::size_t joint_index) const {
    return delta_.at(s).at(joint_index);
  }
  std::optional<StateIndex> successor(StateIndex s, const JointAction& a) const;
  /// Distinct successors of s over all enabled joint actions, ascending.
  const std::vector<StateIndex>& successors(StateIndex s) const {
    return successors_.at(s);
  }

  bool holds(StateIndex s, AtomIndex p) const { return labels_.at(s).at(p); }
  bool holds(StateIndex s, std::string_view atom) const;
  std::vector<std::string> label_names(StateIndex s) const;

  /// Representative (least state index) of the ~_i class of s.
  StateIndex indist_class(AgentIndex i, StateIndex s) const {
    return indist_.at(i).at(s);
  }
  bool indistinguishable(AgentIndex i, StateIndex s, StateIndex t) const {
    return indist_class(i, s) == indist_class(i, t);
  }
  bool has_perfect_information(AgentIndex i) const;

  /// Adds an atom, labelling no state. Returns the existing index if the
  /// atom is already present.
  AtomIndex add_atom(const std::string& name);
  void set_label(StateIndex s, AtomIndex p, bool value = true);

  /// Copy of this model in which every ~_i is the identity.
  Icgs with_perfect_information() const;

 private:
  friend class IcgsBuilder;

  std::vector<Agent> agents_;
  std::vector<std::string> states_;
  std::vector<std::string> atoms_;
  StateIndex initial_ = 0;
  std::vector<std::vector<std::vector<ActionIndex>>> protocol_;  // [agent][state]
  std::vector<std::vector<StateIndex>> delta_;                   // [state][joint]
  std::vector<std::vector<StateIndex>> successors_;
  std::vector<std::vector<bool>> labels_;      // [state][atom]
  std::vector<std::vector<StateIndex>> indist_;  // [agent][state]
};

/// Index-based construction of an Icgs; build() checks every structural
/// invariant and throws SchemaError, ProtocolError or TransitionError.
class IcgsBuilder {
 public:
  AgentIndex add_agent(std::string name, std::vector<std::string> actions);
  StateIndex add_state(std::string name);
  AtomIndex add_atom(std::string name);
  void set_initial(StateIndex s);
  void set_protocol(AgentIndex i, StateIndex s, std::vector<ActionIndex> actions);
  void add_transition(StateIndex from, JointAction action, StateIndex to);
  void add_label(StateIndex s, AtomIndex p);
  void add_indistinguishable(AgentIndex i, StateIndex s, StateIndex t);

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_agents() const { return agents_.size(); }

  Icgs build() const;

 private:
  std::vector<Agent> agents_;
  std::vector<std::string> states_;
  std::vector<std::string> atoms_;
  std::optional<StateIndex> initial_;
  std::map<std::pair<AgentIndex, StateIndex>, std::vector<ActionIndex>> protocol_;
  std::map<std::pair<StateIndex, JointAction>, StateIndex> transitions_;
  std::vector<std::pair<StateIndex, AtomIndex>> labels_;
  std::vector<std::pair<AgentIndex, StatePair>> indist_;
};

/// Cartesian product of d(i, s) over all agents, in joint-index order.
std::vector<JointAction> enabled_joint_actions(const Icgs& m, StateIndex s);

/// Pairs s != s' with s ~_i s' for some listed agent, ascending.
std::vector<StatePair> indist_pairs(const Icgs& m,
                                    const std::vector<AgentIndex>& agents);

/// Per-state bit masks over `atoms` (at most 64). Unknown atoms raise
/// NameError.
std::vector<std::uint64_t> label_masks(const Icgs& m,
                                       const std::vector<std::string>& atoms);

}  // namespace submc
