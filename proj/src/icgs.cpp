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

#include "submc/icgs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "submc/errors.hpp"

namespace submc {

namespace {

template <typename Names>
std::optional<std::size_t> find_name(const Names& names, std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

/// Union-find over state indices; representatives are class minima.
class Partition {
 public:
  explicit Partition(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<AgentIndex> Icgs::find_agent(std::string_view name) const {
  for (AgentIndex i = 0; i < agents_.size(); ++i)
    if (agents_[i].name == name) return i;
  return std::nullopt;
}

AgentIndex Icgs::agent_index(std::string_view name) const {
  if (auto i = find_agent(name)) return *i;
  throw NameError("unknown agent '" + std::string(name) + "'");
}

std::optional<StateIndex> Icgs::find_state(std::string_view name) const {
  return find_name(states_, name);
}

StateIndex Icgs::state_index(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw NameError("unknown state '" + std::string(name) + "'");
}

std::optional<AtomIndex> Icgs::find_atom(std::string_view name) const {
  return find_name(atoms_, name);
}

JointAction Icgs::joint_action(StateIndex s, std::size_t index) const {
  JointAction a;
  a.choice.resize(agents_.size());
  for (std::size_t k = agents_.size(); k-- > 0;) {
    const auto& d = protocol_[k][s];
    a.choice[k] = d[index % d.size()];
    index /= d.size();
  }
  return a;
}

std::optional<std::size_t> Icgs::joint_index(StateIndex s,
                                             const JointAction& a) const {
  if (a.choice.size() != agents_.size()) return std::nullopt;
  std::size_t index = 0;
  for (AgentIndex i = 0; i < agents_.size(); ++i) {
    const auto& d = protocol_[i][s];
    auto it = std::lower_bound(d.begin(), d.end(), a.choice[i]);
    if (it == d.end() || *it != a.choice[i]) return std::nullopt;
    index = index * d.size() + static_cast<std::size_t>(it - d.begin());
  }
  return index;
}

std::optional<StateIndex> Icgs::successor(StateIndex s,
                                          const JointAction& a) const {
  if (auto k = joint_index(s, a)) return delta_[s][*k];
  return std::nullopt;
}

bool Icgs::holds(StateIndex s, std::string_view atom) const {
  auto p = find_atom(atom);
  return p && labels_.at(s)[*p];
}

std::vector<std::string> Icgs::label_names(StateIndex s) const {
  std::vector<std::string> out;
  for (AtomIndex p = 0; p < atoms_.size(); ++p)
    if (labels_.at(s)[p]) out.push_back(atoms_[p]);
  return out;
}

bool Icgs::has_perfect_information(AgentIndex i) const {
  for (StateIndex s = 0; s < states_.size(); ++s)
    if (indist_.at(i)[s] != s) return false;
  return true;
}

AtomIndex Icgs::add_atom(const std::string& name) {
  if (auto p = find_atom(name)) return *p;
  atoms_.push_back(name);
  for (auto& row : labels_) row.push_back(false);
  return atoms_.size() - 1;
}

void Icgs::set_label(StateIndex s, AtomIndex p, bool value) {
  labels_.at(s).at(p) = value;
}

Icgs Icgs::with_perfect_information() const {
  Icgs copy = *this;
  for (auto& classes : copy.indist_)
    std::iota(classes.begin(), classes.end(), StateIndex{0});
  return copy;
}

// ---------------------------------------------------------------------------

AgentIndex IcgsBuilder::add_agent(std::string name,
                                  std::vector<std::string> actions) {
  if (name.empty()) throw SchemaError("agent name must be non-empty");
  for (const auto& a : agents_)
    if (a.name == name) throw SchemaError("duplicate agent '" + name + "'");
  if (actions.empty())
    throw SchemaError("agent '" + name + "' has no actions");
  std::set<std::string> seen;
  for (const auto& a : actions) {
    if (a.empty()) throw SchemaError("empty action name for agent '" + name + "'");
    if (!seen.insert(a).second)
      throw SchemaError("duplicate action '" + a + "' for agent '" + name + "'");
  }
  agents_.push_back({std::move(name), std::move(actions)});
  return agents_.size() - 1;
}

StateIndex IcgsBuilder::add_state(std::string name) {
  if (name.empty()) throw SchemaError("state name must be non-empty");
  if (find_name(states_, name)) throw SchemaError("duplicate state '" + name + "'");
  states_.push_back(std::move(name));
  return states_.size() - 1;
}

AtomIndex IcgsBuilder::add_atom(std::string name) {
  if (auto p = find_name(atoms_, name)) return *p;
  if (name.empty()) throw SchemaError("atom name must be non-empty");
  atoms_.push_back(std::move(name));
  return atoms_.size() - 1;
}

void IcgsBuilder::set_initial(StateIndex s) {
  if (s >= states_.size()) throw NameError("initial state out of range");
  initial_ = s;
}

void IcgsBuilder::set_protocol(AgentIndex i, StateIndex s,
                               std::vector<ActionIndex> actions) {
  if (i >= agents_.size() || s >= states_.size())
    throw NameError("protocol entry references an unknown agent or state");
  if (protocol_.contains({i, s}))
    throw SchemaError("duplicate protocol entry for agent '" + agents_[i].name +
                      "' at state '" + states_[s] + "'");
  std::sort(actions.begin(), actions.end());
  if (std::adjacent_find(actions.begin(), actions.end()) != actions.end())
    throw SchemaError("duplicate action in protocol of '" + agents_[i].name +
                      "' at '" + states_[s] + "'");
  for (ActionIndex a : actions)
    if (a >= agents_[i].actions.size())
      throw NameError("protocol action out of range for agent '" +
                      agents_[i].name + "'");
  protocol_[{i, s}] = std::move(actions);
}

void IcgsBuilder::add_transition(StateIndex from, JointAction action,
                                 StateIndex to) {
  if (from >= states_.size() || to >= states_.size())
    throw NameError("transition references an unknown state");
  if (action.choice.size() != agents_.size())
    throw SchemaError("transition action from '" + states_[from] + "' has " +
                      std::to_string(action.choice.size()) + " entries, expected " +
                      std::to_string(agents_.size()));
  for (AgentIndex i = 0; i < agents_.size(); ++i)
    if (action.choice[i] >= agents_[i].actions.size())
      throw NameError("transition action out of range for agent '" +
                      agents_[i].name + "'");
  auto [it, inserted] = transitions_.emplace(std::pair{from, std::move(action)}, to);
  if (!inserted)
    throw TransitionError("duplicate transition from '" + states_[from] + "'");
}

void IcgsBuilder::add_label(StateIndex s, AtomIndex p) {
  if (s >= states_.size() || p >= atoms_.size())
    throw NameError("label references an unknown state or atom");
  labels_.emplace_back(s, p);
}

void IcgsBuilder::add_indistinguishable(AgentIndex i, StateIndex s, StateIndex t) {
  if (i >= agents_.size() || s >= states_.size() || t >= states_.size())
    throw NameError("indistinguishability references an unknown agent or state");
  indist_.push_back({i, {std::min(s, t), std::max(s, t)}});
}

Icgs IcgsBuilder::build() const {
  if (agents_.empty()) throw SchemaError("model has no agents");
  if (states_.empty()) throw SchemaError("model has no states");
  if (!initial_) throw SchemaError("model has no initial state");

  Icgs m;
  m.agents_ = agents_;
  m.states_ = states_;
  m.atoms_ = atoms_;
  m.initial_ = *initial_;
  const std::size_t n = states_.size();

  m.protocol_.assign(agents_.size(), std::vector<std::vector<ActionIndex>>(n));
  for (AgentIndex i = 0; i < agents_.size(); ++i) {
    for (StateIndex s = 0; s < n; ++s) {
      auto it = protocol_.find({i, s});
      if (it == protocol_.end() || it->second.empty())
        throw ProtocolError("no enabled action for agent '" + agents_[i].name +
                            "' at state '" + states_[s] + "'");
      m.protocol_[i][s] = it->second;
    }
  }

  m.indist_.assign(agents_.size(), std::vector<StateIndex>(n));
  {
    std::vector<Partition> parts(agents_.size(), Partition(n));
    for (const auto& [i, pair] : indist_) parts[i].unite(pair.first, pair.second);
    for (AgentIndex i = 0; i < agents_.size(); ++i)
      for (StateIndex s = 0; s < n; ++s) m.indist_[i][s] = parts[i].find(s);
  }
  for (AgentIndex i = 0; i < agents_.size(); ++i)
    for (StateIndex s = 0; s < n; ++s) {
      StateIndex rep = m.indist_[i][s];
      if (m.protocol_[i][s] != m.protocol_[i][rep])
        throw ProtocolError("protocol of agent '" + agents_[i].name +
                            "' differs between indistinguishable states '" +
                            states_[rep] + "' and '" + states_[s] + "'");
    }

  m.delta_.assign(n, {});
  m.successors_.assign(n, {});
  std::size_t used = 0;
  for (StateIndex s = 0; s < n; ++s) {
    std::size_t count = 1;
    for (AgentIndex i = 0; i < agents_.size(); ++i) count *= m.protocol_[i][s].size();
    m.delta_[s].resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      JointAction a = m.joint_action(s, k);
      auto it = transitions_.find({s, a});
      if (it == transitions_.end()) {
        std::string label;
        for (AgentIndex i = 0; i < agents_.size(); ++i)
          label += (i ? "," : "") + agents_[i].actions[a.choice[i]];
        throw TransitionError("no transition from '" + states_[s] +
                              "' on enabled joint action (" + label + ")");
      }
      m.delta_[s][k] = it->second;
      ++used;
    }
    auto succ = m.delta_[s];
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    m.successors_[s] = std::move(succ);
  }
  if (used != transitions_.size()) {
    for (const auto& [key, to] : transitions_)
      if (!m.joint_index(key.first, key.second))
        throw TransitionError("transition from '" + states_[key.first] +
                              "' uses a joint action that is not enabled there");
  }

  m.labels_.assign(n, std::vector<bool>(atoms_.size(), false));
  for (const auto& [s, p] : labels_) m.labels_[s][p] = true;
  return m;
}

// ---------------------------------------------------------------------------

std::vector<JointAction> enabled_joint_actions(const Icgs& m, StateIndex s) {
  std::vector<JointAction> out;
  out.reserve(m.num_joint_actions(s));
  for (std::size_t k = 0; k < m.num_joint_actions(s); ++k)
    out.push_back(m.joint_action(s, k));
  return out;
}

std::vector<StatePair> indist_pairs(const Icgs& m,
                                    const std::vector<AgentIndex>& agents) {
  std::vector<StatePair> out;
  for (StateIndex s = 0; s < m.num_states(); ++s)
    for (StateIndex t = s + 1; t < m.num_states(); ++t)
      for (AgentIndex i : agents)
        if (m.indistinguishable(i, s, t)) {
          out.push_back({s, t});
          break;
        }
  return out;
}

std::vector<std::uint64_t> label_masks(const Icgs& m,
                                       const std::vector<std::string>& atoms) {
  if (atoms.size() > 64)
    throw UnsupportedFormula("formula mentions more than 64 distinct atoms");
  std::vector<AtomIndex> ids;
  for (const auto& a : atoms) {
    auto p = m.find_atom(a);
    if (!p) throw NameError("unknown atom '" + a + "'");
    ids.push_back(*p);
  }
  std::vector<std::uint64_t> masks(m.num_states(), 0);
  for (StateIndex s = 0; s < m.num_states(); ++s)
    for (std::size_t k = 0; k < ids.size(); ++k)
      if (m.holds(s, ids[k])) masks[s] |= std::uint64_t{1} << k;
  return masks;
}

}  // namespace submc
