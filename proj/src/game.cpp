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


#include "submc/game.hpp"

#include <map>

#include "submc/automata.hpp"
#include "submc/errors.hpp"
#include "submc/submodel.hpp"
#include "submc/transform.hpp"

namespace submc {

namespace {

bool has_temporal_or_quantifier(const Formula& f) {
  if (f.is_temporal() || f.is_quantifier()) return true;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (has_temporal_or_quantifier(f.child(i))) return true;
  return false;
}

bool has_quantifier(const Formula& f) {
  if (f.is_quantifier()) return true;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (has_quantifier(f.child(i))) return true;
  return false;
}

bool uses_only(const Formula& f, bool allow_eventual, bool allow_invariant) {
  switch (f.op()) {
    case Op::Until:
    case Op::Finally:
      if (!allow_eventual) return false;
      break;
    case Op::Release:
    case Op::Globally:
      if (!allow_invariant) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!uses_only(f.child(i), allow_eventual, allow_invariant)) return false;
  return true;
}

/// Joint-action indices at s grouped by the coalition's part of the profile.
using Groups = std::vector<std::vector<std::size_t>>;

std::vector<Groups> profile_groups(const Icgs& m, const std::vector<AgentIndex>& coalition) {
  std::vector<Groups> out(m.num_states());
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    std::map<std::vector<ActionIndex>, std::vector<std::size_t>> by_profile;
    for (std::size_t k = 0; k < m.num_joint_actions(s); ++k) {
      JointAction a = m.joint_action(s, k);
      std::vector<ActionIndex> key;
      for (AgentIndex i : coalition) key.push_back(a.choice[i]);
      by_profile[key].push_back(k);
    }
    for (auto& [key, ks] : by_profile) out[s].push_back(std::move(ks));
  }
  return out;
}

/// One predecessor step over positions. `forcing` selects exists-forall
/// (coalition forces) versus forall-exists (coalition cannot avoid).
template <typename Succ, typename In>
bool pre_at(const Groups& groups, bool forcing, const Succ& succ, const In& in) {
  if (forcing) {
    for (const auto& g : groups) {
      bool all = true;
      for (std::size_t k : g)
        if (!in(succ(k))) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  }
  for (const auto& g : groups) {
    bool any = false;
    for (std::size_t k : g)
      if (in(succ(k))) {
        any = true;
        break;
      }
    if (!any) return false;
  }
  return true;
}

StateSet pre(const Icgs& m, const std::vector<Groups>& groups, bool forcing, const StateSet& target) {
  StateSet out(m.num_states());
  for (StateIndex s = 0; s < m.num_states(); ++s)
    if (pre_at(groups[s], forcing, [&](std::size_t k) { return m.successor(s, k); },
               [&](StateIndex t) { return target.contains(t); }))
      out.insert(s);
  return out;
}

std::vector<AgentIndex> coalition_of(const Icgs& m, const Formula& f) {
  return resolve_agents(m, f.coalition());
}

}  // namespace

const char* to_string(PathClass c) {
  switch (c) {
    case PathClass::AtlFragment:
      return "atl-fragment";
    case PathClass::CoSafety:
      return "co-safety";
    case PathClass::Safety:
      return "safety";
    case PathClass::Unsupported:
      return "unsupported";
  }
  return "?";
}

PathClass classify_path_formula(const Formula& psi) {
  if (has_quantifier(psi)) return PathClass::Unsupported;
  Formula n = to_nnf(psi);
  if (n.is_temporal()) {
    bool flat = true;
    for (std::size_t i = 0; i < n.arity(); ++i)
      if (has_temporal_or_quantifier(n.child(i))) flat = false;
    if (flat) return PathClass::AtlFragment;
  }
  if (uses_only(n, true, false)) return PathClass::CoSafety;
  if (uses_only(n, false, true)) return PathClass::Safety;
  return PathClass::Unsupported;
}

StateSet controllable_pre(const Icgs& m, const std::vector<AgentIndex>& coalition,
                          const StateSet& target) {
  return pre(m, profile_groups(m, coalition), true, target);
}

StateSet adversarial_pre(const Icgs& m, const std::vector<AgentIndex>& coalition,
                         const StateSet& target) {
  return pre(m, profile_groups(m, coalition), false, target);
}

StateSet eval_boolean(const Icgs& m, const Formula& f) {
  const std::size_t n = m.num_states();
  switch (f.op()) {
    case Op::True:
      return StateSet::full(n);
    case Op::False:
      return StateSet(n);
    case Op::Atom: {
      auto p = m.find_atom(f.name());
      if (!p) throw NameError("unknown atom '" + f.name() + "'");
      StateSet out(n);
      for (StateIndex s = 0; s < n; ++s)
        if (m.holds(s, *p)) out.insert(s);
      return out;
    }
    case Op::Not:
      return eval_boolean(m, f.lhs()).complement();
    case Op::And:
      return eval_boolean(m, f.lhs()) & eval_boolean(m, f.rhs());
    case Op::Or:
      return eval_boolean(m, f.lhs()) | eval_boolean(m, f.rhs());
    default:
      throw UnsupportedFormula("not a boolean state formula: " + f.to_string());
  }
}

StateSet check_atl_fragment(const Icgs& m, Op kind, const std::vector<AgentIndex>& coalition,
                            const Formula& psi) {
  if (classify_path_formula(psi) != PathClass::AtlFragment)
    throw UnsupportedFormula("not in the ATL fragment: " + psi.to_string());
  const Formula body = to_nnf(psi);
  const bool forcing = kind == Op::Strategic;
  const auto groups = profile_groups(m, coalition);
  const std::size_t n = m.num_states();
  auto step = [&](const StateSet& z) { return pre(m, groups, forcing, z); };
  auto least = [&](const StateSet& a, const StateSet& b) {
    StateSet z(n);
    while (true) {
      StateSet next = b | (a & step(z));
      if (next == z) return z;
      z = std::move(next);
    }
  };
  auto greatest = [&](const StateSet& a, const StateSet& b) {
    StateSet z = StateSet::full(n);
    while (true) {
      StateSet next = b & (a | step(z));
      if (next == z) return z;
      z = std::move(next);
    }
  };
  switch (body.op()) {
    case Op::Next:
      return step(eval_boolean(m, body.lhs()));
    case Op::Until:
      return least(eval_boolean(m, body.lhs()), eval_boolean(m, body.rhs()));
    case Op::Finally:
      return least(StateSet::full(n), eval_boolean(m, body.lhs()));
    case Op::Release:
      return greatest(eval_boolean(m, body.lhs()), eval_boolean(m, body.rhs()));
    case Op::Globally:
      return greatest(StateSet(n), eval_boolean(m, body.lhs()));
    default:
      throw UnsupportedFormula("not in the ATL fragment: " + psi.to_string());
  }
}

StateSet check_strategic(const Icgs& m, const Formula& f) {
  if (!f.is_strategic())
    throw std::invalid_argument("check_strategic expects <<G>> or [[G]] at the root");
  const auto coalition = coalition_of(m, f);
  for (AgentIndex i : coalition)
    if (!m.has_perfect_information(i))
      throw PreconditionError("coalition agent '" + m.agent(i).name +
                              "' has imperfect information in the model");

  const Formula& body = f.lhs();
  const PathClass cls = classify_path_formula(body);
  if (cls == PathClass::Unsupported)
    throw UnsupportedFormula("strategic body outside the supported fragment: " + body.to_string());
  if (cls == PathClass::AtlFragment) return check_atl_fragment(m, f.op(), coalition, body);

  const bool forcing = f.op() == Op::Strategic;
  const Acceptance kind = cls == PathClass::CoSafety ? Acceptance::Reach : Acceptance::Safe;
  const auto atoms = atoms_of(body);
  const auto masks = label_masks(m, atoms);
  ObjectiveAutomaton dfa(to_nnf(body), atoms, kind);

  // Product positions (state, automaton state), explored from every state.
  std::map<std::pair<StateIndex, std::size_t>, std::size_t> index;
  std::vector<std::pair<StateIndex, std::size_t>> positions;
  std::vector<std::vector<std::size_t>> succ;
  auto position = [&](StateIndex s, std::size_t q) {
    auto [it, fresh] = index.emplace(std::pair{s, q}, positions.size());
    if (fresh) positions.emplace_back(s, q);
    return it->second;
  };
  std::vector<std::size_t> start(m.num_states());
  for (StateIndex s = 0; s < m.num_states(); ++s)
    start[s] = position(s, dfa.step(dfa.initial(), masks[s]));
  for (std::size_t p = 0; p < positions.size(); ++p) {
    auto [s, q] = positions[p];
    std::vector<std::size_t> out(m.num_joint_actions(s));
    for (std::size_t k = 0; k < out.size(); ++k) {
      StateIndex t = m.successor(s, k);
      out[k] = position(t, dfa.step(q, masks[t]));
    }
    succ.push_back(std::move(out));
  }

  const auto groups = profile_groups(m, coalition);
  const std::size_t np = positions.size();
  std::vector<char> win(np);
  for (std::size_t p = 0; p < np; ++p)
    win[p] = kind == Acceptance::Reach ? dfa.is_true(positions[p].second) : 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < np; ++p) {
      const std::size_t q = positions[p].second;
      bool v;
      if (kind == Acceptance::Reach) {
        if (win[p]) continue;
        v = pre_at(groups[positions[p].first], forcing, [&](std::size_t k) { return succ[p][k]; },
                   [&](std::size_t r) { return win[r] != 0; });
      } else {
        if (!win[p]) continue;
        v = !dfa.is_false(q) &&
            pre_at(groups[positions[p].first], forcing, [&](std::size_t k) { return succ[p][k]; },
                   [&](std::size_t r) { return win[r] != 0; });
      }
      if (static_cast<bool>(win[p]) != v) {
        win[p] = v;
        changed = true;
      }
    }
  }

  StateSet out(m.num_states());
  for (StateIndex s = 0; s < m.num_states(); ++s)
    if (win[start[s]]) out.insert(s);
  return out;
}

}  // namespace submc
