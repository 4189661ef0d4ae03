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


#include "submc/ctlstar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "submc/automata.hpp"
#include "submc/errors.hpp"
#include "submc/game.hpp"
#include "submc/transform.hpp"

namespace submc {

namespace {

bool has_quantifier(const Formula& f) {
  if (f.is_quantifier()) return true;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (has_quantifier(f.child(i))) return true;
  return false;
}

void require_ltl(const Formula& psi) {
  if (has_quantifier(psi))
    throw UnsupportedFormula("path formula must be quantifier-free: " + psi.to_string());
}

/// Product of the model with the degeneralized automaton: nodes are
/// (state, automaton state, level) with level in [0, K]; level K accepts.
class DegeneralizedProduct {
 public:
  DegeneralizedProduct(const Icgs& m, const Formula& psi)
      : m_(m), nba_(to_nnf(psi), atoms_of(psi)), masks_(label_masks(m, atoms_of(psi))),
        k_(nba_.num_acceptance()) {}

  std::vector<std::size_t> initial(StateIndex s) {
    std::vector<std::size_t> out;
    for (auto q : nba_.initial()) out.push_back(node(s, q, 0));
    return out;
  }

  const std::vector<std::size_t>& successors(std::size_t id) {
    if (id < succ_.size() && done_[id]) return succ_[id];
    auto [s, q, l] = nodes_[id];
    std::vector<std::size_t> out;
    for (const auto& e : nba_.edges(q, masks_[s])) {
      std::size_t l2 = next_level(l, e.acc);
      for (StateIndex t : m_.successors(s)) out.push_back(node(t, e.to, l2));
    }
    if (succ_.size() < nodes_.size()) {
      succ_.resize(nodes_.size());
      done_.resize(nodes_.size());
    }
    succ_[id] = std::move(out);
    done_[id] = 1;
    return succ_[id];
  }

  bool accepting(std::size_t id) const { return std::get<2>(nodes_[id]) == k_; }
  StateIndex state(std::size_t id) const { return std::get<0>(nodes_[id]); }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::size_t next_level(std::size_t l, std::uint64_t acc) const {
    std::size_t r = l == k_ ? 0 : l;
    while (r < k_ && ((acc >> r) & 1U)) ++r;
    return r;
  }

  std::size_t node(StateIndex s, std::size_t q, std::size_t l) {
    std::uint64_t key = (std::uint64_t(s) << 40) | (std::uint64_t(q) << 8) | l;
    auto [it, fresh] = index_.emplace(key, nodes_.size());
    if (fresh) nodes_.emplace_back(s, q, l);
    return it->second;
  }

  const Icgs& m_;
  BuchiAutomaton nba_;
  std::vector<std::uint64_t> masks_;
  std::size_t k_;
  std::vector<std::tuple<StateIndex, std::size_t, std::size_t>> nodes_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<char> done_;
};

struct Frame {
  std::size_t node;
  std::size_t next = 0;
};

/// Inner search of the nested DFS: a path from seed back to seed.
std::optional<std::vector<std::size_t>> cycle_through(DegeneralizedProduct& p, std::size_t seed,
                                                      std::vector<char>& flagged) {
  auto mark = [&](std::size_t n) {
    if (flagged.size() <= n) flagged.resize(p.size() + 1);
    flagged[n] = 1;
  };
  auto marked = [&](std::size_t n) { return n < flagged.size() && flagged[n]; };
  std::vector<Frame> stack{{seed}};
  mark(seed);
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& succ = p.successors(f.node);
    if (f.next == succ.size()) {
      stack.pop_back();
      continue;
    }
    std::size_t c = succ[f.next++];
    if (c == seed) {
      std::vector<std::size_t> path;
      for (const auto& fr : stack) path.push_back(fr.node);
      return path;
    }
    if (!marked(c)) {
      mark(c);
      stack.push_back({c});
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Lasso> find_path(const Icgs& m, StateIndex s, const Formula& psi) {
  require_ltl(psi);
  DegeneralizedProduct p(m, psi);
  std::vector<char> visited, flagged;
  auto seen = [&](std::size_t n) { return n < visited.size() && visited[n]; };
  auto visit = [&](std::size_t n) {
    if (visited.size() <= n) visited.resize(p.size() + 1);
    visited[n] = 1;
  };
  for (std::size_t root : p.initial(s)) {
    if (seen(root)) continue;
    visit(root);
    std::vector<Frame> stack{{root}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& succ = p.successors(f.node);
      if (f.next < succ.size()) {
        std::size_t c = succ[f.next++];
        if (!seen(c)) {
          visit(c);
          stack.push_back({c});
        }
        continue;
      }
      if (p.accepting(f.node)) {
        if (auto loop = cycle_through(p, f.node, flagged)) {
          Lasso out;
          for (std::size_t i = 0; i + 1 < stack.size(); ++i) out.prefix.push_back(p.state(stack[i].node));
          for (std::size_t n : *loop) out.cycle.push_back(p.state(n));
          return out;
        }
      }
      stack.pop_back();
    }
  }
  return std::nullopt;
}

bool exists_path(const Icgs& m, StateIndex s, const Formula& psi) {
  return find_path(m, s, psi).has_value();
}

StateSet exists_path_states(const Icgs& m, const Formula& psi) {
  require_ltl(psi);
  const auto atoms = atoms_of(psi);
  const auto masks = label_masks(m, atoms);
  BuchiAutomaton nba(to_nnf(psi), atoms);
  const std::uint64_t full = nba.full_acceptance();

  // Explicit generalized product over (state, automaton state).
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::pair<StateIndex, std::size_t>> nodes;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> edges;
  auto node = [&](StateIndex s, std::size_t q) {
    std::uint64_t key = (std::uint64_t(s) << 32) | q;
    auto [it, fresh] = index.emplace(key, nodes.size());
    if (fresh) nodes.emplace_back(s, q);
    return it->second;
  };
  std::vector<std::vector<std::size_t>> roots(m.num_states());
  for (StateIndex s = 0; s < m.num_states(); ++s)
    for (auto q : nba.initial()) roots[s].push_back(node(s, q));
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    auto [s, q] = nodes[n];
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (const auto& e : nba.edges(q, masks[s]))
      for (StateIndex t : m.successors(s)) out.emplace_back(node(t, e.to), e.acc);
    edges.push_back(std::move(out));
  }

  // Tarjan, iterative.
  const std::size_t n = nodes.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> idx(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> scc_stack;
  std::size_t counter = 0, ncomp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (idx[r] != kUnset) continue;
    std::vector<Frame> call{{r}};
    idx[r] = low[r] = counter++;
    scc_stack.push_back(r);
    on_stack[r] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < edges[f.node].size()) {
        std::size_t c = edges[f.node][f.next++].first;
        if (idx[c] == kUnset) {
          idx[c] = low[c] = counter++;
          scc_stack.push_back(c);
          on_stack[c] = 1;
          call.push_back({c});
        } else if (on_stack[c]) {
          low[f.node] = std::min(low[f.node], idx[c]);
        }
        continue;
      }
      std::size_t v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == idx[v]) {
        while (true) {
          std::size_t w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
    }
  }

  std::vector<std::uint64_t> acc(ncomp, 0);
  std::vector<char> cyclic(ncomp, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& [w, a] : edges[v])
      if (comp[v] == comp[w]) {
        cyclic[comp[v]] = 1;
        acc[comp[v]] |= a;
      }

  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& e : edges[v]) preds[e.first].push_back(v);
  std::vector<char> good(n, 0);
  std::vector<std::size_t> work;
  for (std::size_t v = 0; v < n; ++v)
    if (cyclic[comp[v]] && (acc[comp[v]] & full) == full) {
      good[v] = 1;
      work.push_back(v);
    }
  while (!work.empty()) {
    std::size_t v = work.back();
    work.pop_back();
    for (std::size_t u : preds[v])
      if (!good[u]) {
        good[u] = 1;
        work.push_back(u);
      }
  }

  StateSet out(m.num_states());
  for (StateIndex s = 0; s < m.num_states(); ++s)
    for (std::size_t r : roots[s])
      if (good[r]) {
        out.insert(s);
        break;
      }
  return out;
}

namespace {

StateSet sat(Icgs& work, const Formula& f);

/// Replaces maximal quantified sub-formulas of a path formula by fresh
/// atoms labelled on `work`.
Formula reduce(Icgs& work, const Formula& g) {
  if (g.is_quantifier()) {
    StateSet set = sat(work, g);
    std::set<std::string> taken(work.atoms().begin(), work.atoms().end());
    std::string name = fresh_name("ctl_sub", taken);
    AtomIndex p = work.add_atom(name);
    for (StateIndex s : set.elements()) work.set_label(s, p);
    return Formula::atom(name);
  }
  if (g.arity() == 0) return g;
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < g.arity(); ++i) kids.push_back(reduce(work, g.child(i)));
  return Formula::with_children(g, std::move(kids));
}

StateSet sat(Icgs& work, const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return eval_boolean(work, f);
    case Op::Not:
      return sat(work, f.lhs()).complement();
    case Op::And:
      return sat(work, f.lhs()) & sat(work, f.rhs());
    case Op::Or:
      return sat(work, f.lhs()) | sat(work, f.rhs());
    case Op::Exists:
      return exists_path_states(work, reduce(work, f.lhs()));
    case Op::ForAll:
      return exists_path_states(work, reduce(work, to_nnf(Formula::negation(f.lhs())))).complement();
    case Op::Strategic:
    case Op::StrategicDual:
      throw UnsupportedFormula("strategic operator in a CTL* formula: " + f.to_string());
    default:
      throw std::invalid_argument("temporal operator outside a path quantifier: " + f.to_string());
  }
}

}  // namespace

StateSet sat_ctlstar(const Icgs& m, const Formula& f) {
  Icgs work = m;
  return sat(work, f);
}

bool check_ctlstar(const Icgs& m, StateIndex s, const Formula& f) {
  return sat_ctlstar(m, f).contains(s);
}

}  // namespace submc
