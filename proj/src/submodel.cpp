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


#include "submc/submodel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "submc/errors.hpp"
#include "submc/transform.hpp"

namespace submc {

namespace {

std::string negated_atom_name(const std::string& p, const std::set<std::string>& taken) {
  std::string prefix = "n";
  while (taken.contains(prefix + p)) prefix += "_";
  return prefix + p;
}

SubModel generate(const Icgs& m, const StateSet& core, SubModelKind kind) {
  if (core.universe() != m.num_states())
    throw std::invalid_argument("core does not range over the model's states");
  if (!core.contains(m.initial()))
    throw InitialStateRemoved("core excludes the initial state '" + m.state_name(m.initial()) + "'");

  SubModel sub{.model = {}, .core = core, .sink = 0, .kind = kind, .to_base = {},
               .from_base = std::vector<std::optional<StateIndex>>(m.num_states())};
  IcgsBuilder b;
  for (AgentIndex i = 0; i < m.num_agents(); ++i) b.add_agent(m.agent(i).name, m.agent(i).actions);
  std::set<std::string> names;
  for (StateIndex s = 0; s < m.num_states(); ++s) names.insert(m.state_name(s));
  for (StateIndex s : core.elements()) {
    sub.from_base[s] = b.add_state(m.state_name(s));
    sub.to_base.push_back(s);
  }
  const std::string sink_name =
      fresh_name(kind == SubModelKind::Negative ? "s_bot" : "s_top", names);
  sub.sink = b.add_state(sink_name);
  sub.to_base.push_back(SubModel::npos);
  for (const auto& a : m.atoms()) b.add_atom(a);
  b.set_initial(*sub.from_base[m.initial()]);

  for (StateIndex s : core.elements()) {
    StateIndex t = *sub.from_base[s];
    for (AgentIndex i = 0; i < m.num_agents(); ++i) b.set_protocol(i, t, m.protocol(i, s));
    for (std::size_t k = 0; k < m.num_joint_actions(s); ++k) {
      StateIndex to = m.successor(s, k);
      b.add_transition(t, m.joint_action(s, k), sub.from_base[to].value_or(sub.sink));
    }
    for (AtomIndex p = 0; p < m.num_atoms(); ++p)
      if (m.holds(s, p)) b.add_label(t, p);
    for (AgentIndex i = 0; i < m.num_agents(); ++i) {
      StateIndex rep = m.indist_class(i, s);
      // Link each member to the least core member of its class.
      for (StateIndex u : core.elements()) {
        if (u >= s) break;
        if (m.indist_class(i, u) == rep) {
          b.add_indistinguishable(i, *sub.from_base[u], t);
          break;
        }
      }
    }
  }

  // Sink: every action enabled, every joint action loops.
  JointAction a;
  a.choice.assign(m.num_agents(), 0);
  for (AgentIndex i = 0; i < m.num_agents(); ++i) {
    std::vector<ActionIndex> all(m.agent(i).actions.size());
    for (ActionIndex k = 0; k < all.size(); ++k) all[k] = k;
    b.set_protocol(i, sub.sink, std::move(all));
  }
  while (true) {
    b.add_transition(sub.sink, a, sub.sink);
    std::size_t i = m.num_agents();
    while (i-- > 0) {
      if (++a.choice[i] < m.agent(i).actions.size()) break;
      a.choice[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  if (kind == SubModelKind::Positive)
    for (AtomIndex p = 0; p < m.num_atoms(); ++p) b.add_label(sub.sink, p);

  sub.model = b.build();
  return sub;
}

}  // namespace

AtomIndex SubModel::add_atom(const std::string& name) {
  AtomIndex p = model.add_atom(name);
  if (kind == SubModelKind::Positive) model.set_label(sink, p);
  return p;
}

PreprocessedProblem preprocess(const Icgs& m, const Formula& f) {
  for (const auto& a : atoms_of(f))
    if (!m.find_atom(a)) throw NameError("formula mentions unknown atom '" + a + "'");
  for (const auto& g : coalition_agents(f)) m.agent_index(g);

  PreprocessedProblem out{m, to_nnf(f), {}};
  std::set<std::string> taken(m.atoms().begin(), m.atoms().end());
  for (const auto& a : atoms_of(f)) taken.insert(a);
  for (const auto& p : extract_negated_atoms(out.formula)) {
    std::string np = negated_atom_name(p, taken);
    taken.insert(np);
    out.formula = replace_negated_atom(out.formula, p, np);
    AtomIndex src = *out.model.find_atom(p);
    AtomIndex dst = out.model.add_atom(np);
    for (StateIndex s = 0; s < out.model.num_states(); ++s)
      if (!out.model.holds(s, src)) out.model.set_label(s, dst);
    out.atom_map.emplace_back(p, np);
  }
  return out;
}

SubModel generate_negative(const Icgs& m, const StateSet& core) {
  return generate(m, core, SubModelKind::Negative);
}

SubModel generate_positive(const Icgs& m, const StateSet& core) {
  return generate(m, core, SubModelKind::Positive);
}

std::vector<StateSet> enumerate_cores(const Icgs& m, const std::vector<AgentIndex>& agents,
                                      EnumerationStats* stats) {
  EnumerationStats local;
  EnumerationStats& st = stats ? *stats : local;
  std::vector<StateSet> out;
  std::set<StateSet> visited;
  std::vector<StateSet> work{StateSet::full(m.num_states())};
  while (!work.empty()) {
    StateSet core = std::move(work.back());
    work.pop_back();
    if (!visited.insert(core).second) {
      ++st.duplicates;
      continue;
    }
    ++st.explored;
    if (!core.contains(m.initial())) {
      ++st.discarded_initial;
      continue;
    }
    std::optional<StatePair> conflict;
    const auto members = core.elements();
    for (std::size_t x = 0; x < members.size() && !conflict; ++x)
      for (std::size_t y = x + 1; y < members.size() && !conflict; ++y)
        for (AgentIndex i : agents)
          if (m.indistinguishable(i, members[x], members[y])) {
            conflict = StatePair{members[x], members[y]};
            break;
          }
    if (!conflict) {
      out.push_back(std::move(core));
      continue;
    }
    StateSet drop_second = core, drop_first = core;
    drop_second.erase(conflict->second);
    drop_first.erase(conflict->first);
    work.push_back(std::move(drop_second));
    work.push_back(std::move(drop_first));
  }
  return out;
}

std::vector<AgentIndex> resolve_agents(const Icgs& m, const std::vector<std::string>& names) {
  std::vector<AgentIndex> out;
  for (const auto& n : names) out.push_back(m.agent_index(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CandidatePair> find_submodels(const Icgs& m, const Formula& f, EnumerationStats* stats) {
  std::vector<CandidatePair> out;
  for (auto& core : enumerate_cores(m, resolve_agents(m, coalition_agents(f)), stats))
    out.push_back({core, generate_negative(m, core), generate_positive(m, core)});
  return out;
}

}  // namespace submc
