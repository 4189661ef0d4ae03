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


#include "submc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "submc/errors.hpp"
#include "submc/game.hpp"
#include "submc/submodel.hpp"
#include "submc/transform.hpp"

namespace submc {

namespace {

void require_ltl(const Formula& f) {
  if (f.is_quantifier()) throw UnsupportedFormula("quantifier inside an LTL formula: " + f.to_string());
  for (std::size_t i = 0; i < f.arity(); ++i) require_ltl(f.child(i));
}

void collect_closure(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  for (std::size_t i = 0; i < f.arity(); ++i) collect_closure(f.child(i), out);
}

}  // namespace

bool eval_word(const std::vector<LabelSet>& prefix, const std::vector<LabelSet>& cycle,
               const Formula& psi) {
  if (cycle.empty()) throw PreconditionError("lasso cycle must be non-empty");
  require_ltl(psi);
  std::vector<const LabelSet*> pos;
  for (const auto& l : prefix) pos.push_back(&l);
  for (const auto& l : cycle) pos.push_back(&l);
  const std::size_t n = pos.size(), loop = prefix.size();
  auto next = [&](std::size_t i) { return i + 1 < n ? i + 1 : loop; };

  std::function<std::vector<bool>(const Formula&)> eval = [&](const Formula& f) {
    std::vector<bool> v(n);
    switch (f.op()) {
      case Op::True: v.assign(n, true); break;
      case Op::False: break;
      case Op::Atom:
        for (std::size_t i = 0; i < n; ++i) v[i] = pos[i]->contains(f.name());
        break;
      case Op::Not: {
        auto c = eval(f.child(0));
        for (std::size_t i = 0; i < n; ++i) v[i] = !c[i];
        break;
      }
      case Op::And:
      case Op::Or: {
        auto a = eval(f.lhs()), b = eval(f.rhs());
        for (std::size_t i = 0; i < n; ++i) v[i] = f.op() == Op::And ? a[i] && b[i] : a[i] || b[i];
        break;
      }
      case Op::Next: {
        auto c = eval(f.child(0));
        for (std::size_t i = 0; i < n; ++i) v[i] = c[next(i)];
        break;
      }
      default: {
        // Fixpoints of the unrolling laws; n rounds reach them.
        bool least = f.op() == Op::Until || f.op() == Op::Finally;
        std::vector<bool> lhs, rhs;
        if (f.op() == Op::Until || f.op() == Op::Release) {
          lhs = eval(f.lhs());
          rhs = eval(f.rhs());
        } else {
          rhs = eval(f.child(0));
          lhs.assign(n, f.op() == Op::Finally);
        }
        v.assign(n, !least);
        for (std::size_t round = 0; round <= n; ++round)
          for (std::size_t k = n; k-- > 0;) {
            bool nx = v[next(k)];
            v[k] = least ? (rhs[k] || (lhs[k] && nx)) : (rhs[k] && (lhs[k] || nx));
          }
      }
    }
    return v;
  };
  return eval(psi)[0];
}

bool lasso_eval(const Icgs& m, const Lasso& path, const Formula& psi) {
  auto labels = [&](const std::vector<StateIndex>& states) {
    std::vector<LabelSet> out;
    for (StateIndex s : states) {
      auto names = m.label_names(s);
      out.emplace_back(names.begin(), names.end());
    }
    return out;
  };
  return eval_word(labels(path.prefix), labels(path.cycle), psi);
}

bool oracle_lasso_ltl(const Icgs& m, StateIndex s, const Formula& psi, std::size_t bound,
                      std::size_t budget) {
  require_ltl(psi);
  if (bound == 0) {
    std::set<Formula> cl;
    collect_closure(psi, cl);
    bound = m.num_states() * (cl.size() + 1);
  }
  std::size_t visited = 0;
  std::vector<StateIndex> path{s};
  std::function<bool()> dfs = [&]() -> bool {
    StateIndex last = path.back();
    for (StateIndex t : m.successors(last))
      for (std::size_t j = 0; j < path.size(); ++j)
        if (path[j] == t) {
          if (++visited > budget) throw SearchSpaceTooLarge("lasso budget exhausted");
          Lasso l{{path.begin(), path.begin() + static_cast<std::ptrdiff_t>(j)},
                  {path.begin() + static_cast<std::ptrdiff_t>(j), path.end()}};
          if (lasso_eval(m, l, psi)) return true;
        }
    if (path.size() >= bound) return false;
    for (StateIndex t : m.successors(last)) {
      path.push_back(t);
      bool found = dfs();
      path.pop_back();
      if (found) return true;
    }
    return false;
  };
  return dfs();
}

// ---------------------------------------------------------------- tableau

TableauLtl::TableauLtl(const Icgs& m, const Formula& psi) : m_(&m), psi_(to_nnf(psi)) {
  require_ltl(psi_);
  std::set<Formula> cl;
  collect_closure(psi_, cl);
  for (const Formula& f : cl)
    if (f.is_temporal()) temporal_.push_back(f);
  if (temporal_.size() > 14) throw SearchSpaceTooLarge("too many temporal sub-formulas for the tableau");
  for (std::size_t k = 0; k < temporal_.size(); ++k)
    if (temporal_[k].op() == Op::Until || temporal_[k].op() == Op::Finally) eventual_.push_back(k);
  assignments_ = std::size_t{1} << temporal_.size();

  const std::size_t n = m.num_states();
  mask_.assign(n * assignments_, 0);
  psi_value_.assign(n * assignments_, false);
  fulfilled_.assign(n * assignments_, 0);
  for (StateIndex s = 0; s < n; ++s)
    for (std::uint64_t a = 0; a < assignments_; ++a) {
      std::size_t node = s * assignments_ + a;
      for (std::size_t k = 0; k < temporal_.size(); ++k) {
        const Formula& t = temporal_[k];
        // Obligation k of a predecessor is "X t" (for X nodes: "t").
        bool now = t.op() == Op::Next ? value(t.child(0), s, a) : value(t, s, a);
        if (now) mask_[node] |= std::uint64_t{1} << k;
      }
      psi_value_[node] = value(psi_, s, a);
      for (std::size_t e = 0; e < eventual_.size(); ++e) {
        const Formula& t = temporal_[eventual_[e]];
        const Formula& goal = t.op() == Op::Until ? t.rhs() : t.child(0);
        if (!value(t, s, a) || value(goal, s, a)) fulfilled_[node] |= std::uint64_t{1} << e;
      }
    }
  by_mask_.resize(n * assignments_);
  for (std::size_t v = 0; v < n * assignments_; ++v)
    by_mask_[(v / assignments_) * assignments_ + mask_[v]].push_back(v);
}

bool TableauLtl::value(const Formula& f, StateIndex s, std::uint64_t a) const {
  auto bit = [&](const Formula& t) {
    auto it = std::find(temporal_.begin(), temporal_.end(), t);
    return (a >> static_cast<std::size_t>(it - temporal_.begin())) & 1U;
  };
  switch (f.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: {
      auto p = m_->find_atom(f.name());
      return p && m_->holds(s, *p);
    }
    case Op::Not: return !value(f.child(0), s, a);
    case Op::And: return value(f.lhs(), s, a) && value(f.rhs(), s, a);
    case Op::Or: return value(f.lhs(), s, a) || value(f.rhs(), s, a);
    case Op::Next: return bit(f);
    case Op::Finally: return value(f.child(0), s, a) || bit(f);
    case Op::Globally: return value(f.child(0), s, a) && bit(f);
    case Op::Until: return value(f.rhs(), s, a) || (value(f.lhs(), s, a) && bit(f));
    case Op::Release: return value(f.rhs(), s, a) && (value(f.lhs(), s, a) || bit(f));
    default: throw UnsupportedFormula("unexpected operator in LTL formula");
  }
}

StateSet TableauLtl::exists() const {
  std::vector<std::vector<StateIndex>> succ;
  for (StateIndex s = 0; s < m_->num_states(); ++s) succ.push_back(m_->successors(s));
  return exists(succ);
}

StateSet TableauLtl::exists(const std::vector<std::vector<StateIndex>>& succ) const {
  const std::size_t n = m_->num_states();
  const std::size_t nodes = n * assignments_;
  // Successors of node (s, a): (t, b) with t in succ[s] and mask(t, b) == a.
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (std::size_t v = 0; v < nodes; ++v)
    for (StateIndex t : succ[v / assignments_]) {
      const auto& to = by_mask_[t * assignments_ + v % assignments_];
      adj[v].insert(adj[v].end(), to.begin(), to.end());
    }

  // Tarjan, recursive: the oracle only sees small graphs.
  std::vector<std::size_t> index(nodes, SIZE_MAX), low(nodes), comp(nodes, SIZE_MAX), stack;
  std::vector<bool> on_stack(nodes, false);
  std::size_t counter = 0, comps = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = comps;
      } while (w != v);
      ++comps;
    }
  };
  for (std::size_t v = 0; v < nodes; ++v)
    if (index[v] == SIZE_MAX) visit(v);

  const std::uint64_t all = eventual_.empty() ? 0 : (std::uint64_t{1} << eventual_.size()) - 1;
  std::vector<std::uint64_t> comp_fulfilled(comps, 0);
  std::vector<bool> comp_cyclic(comps, false);
  for (std::size_t v = 0; v < nodes; ++v) {
    comp_fulfilled[comp[v]] |= fulfilled_[v];
    for (std::size_t w : adj[v])
      if (comp[w] == comp[v]) comp_cyclic[comp[v]] = true;
  }
  std::vector<std::vector<std::size_t>> radj(nodes);
  for (std::size_t v = 0; v < nodes; ++v)
    for (std::size_t w : adj[v]) radj[w].push_back(v);
  std::vector<bool> good(nodes, false);
  std::vector<std::size_t> work;
  for (std::size_t v = 0; v < nodes; ++v)
    if (comp_cyclic[comp[v]] && (comp_fulfilled[comp[v]] & all) == all) {
      good[v] = true;
      work.push_back(v);
    }
  while (!work.empty()) {
    std::size_t v = work.back();
    work.pop_back();
    for (std::size_t u : radj[v])
      if (!good[u]) {
        good[u] = true;
        work.push_back(u);
      }
  }
  StateSet out(n);
  for (std::size_t v = 0; v < nodes; ++v)
    if (good[v] && psi_value_[v]) out.insert(v / assignments_);
  return out;
}

// ------------------------------------------------------------------ CTL*

namespace {

// Replaces maximal quantified sub-formulas of a path formula by fresh atoms
// on `work`, deciding each with `decide`.
Formula flatten_quantified(Icgs& work, const Formula& f,
                           const std::function<StateSet(Icgs&, const Formula&)>& decide,
                           std::size_t& fresh) {
  if (f.is_quantifier()) {
    StateSet sat = decide(work, f);
    std::string name = "oracle_q" + std::to_string(fresh++);
    AtomIndex p = work.add_atom(name);
    for (StateIndex s : sat.elements()) work.set_label(s, p);
    return Formula::atom(name);
  }
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < f.arity(); ++i)
    kids.push_back(flatten_quantified(work, f.child(i), decide, fresh));
  return Formula::with_children(f, kids);
}

StateSet ctlstar_rec(Icgs& work, const Formula& f, std::size_t& fresh) {
  const std::size_t n = work.num_states();
  switch (f.op()) {
    case Op::True: return StateSet::full(n);
    case Op::False: return StateSet(n);
    case Op::Atom: {
      StateSet out(n);
      if (auto p = work.find_atom(f.name()))
        for (StateIndex s = 0; s < n; ++s)
          if (work.holds(s, *p)) out.insert(s);
      return out;
    }
    case Op::Not: return ctlstar_rec(work, f.child(0), fresh).complement();
    case Op::And: return ctlstar_rec(work, f.lhs(), fresh) & ctlstar_rec(work, f.rhs(), fresh);
    case Op::Or: return ctlstar_rec(work, f.lhs(), fresh) | ctlstar_rec(work, f.rhs(), fresh);
    case Op::Exists:
    case Op::ForAll: {
      auto decide = [&fresh](Icgs& w, const Formula& g) { return ctlstar_rec(w, g, fresh); };
      Formula body = flatten_quantified(work, f.child(0), decide, fresh);
      if (f.op() == Op::Exists) return TableauLtl(work, body).exists();
      return TableauLtl(work, Formula::negation(body)).exists().complement();
    }
    default:
      throw UnsupportedFormula("oracle_ctlstar: unexpected operator in " + f.to_string());
  }
}

}  // namespace

StateSet oracle_ctlstar(const Icgs& m, const Formula& f) {
  Icgs work = m;
  std::size_t fresh = 0;
  return ctlstar_rec(work, f, fresh);
}

// ------------------------------------------------------- memoryless search

namespace {

struct StrategySpace {
  std::vector<AgentIndex> coalition;
  // One slot per (coalition agent, class representative).
  std::vector<std::pair<AgentIndex, StateIndex>> slots;
  std::vector<const std::vector<ActionIndex>*> options;
  double count = 1;
};

StrategySpace strategy_space(const Icgs& m, const Formula& f) {
  if (!f.is_strategic()) throw PreconditionError("expected <<G>>psi or [[G]]psi");
  StrategySpace sp;
  sp.coalition = resolve_agents(m, f.coalition());
  std::sort(sp.coalition.begin(), sp.coalition.end());
  sp.coalition.erase(std::unique(sp.coalition.begin(), sp.coalition.end()), sp.coalition.end());
  for (AgentIndex i : sp.coalition)
    for (StateIndex s = 0; s < m.num_states(); ++s)
      if (m.indist_class(i, s) == s) {
        sp.slots.push_back({i, s});
        sp.options.push_back(&m.protocol(i, s));
        sp.count *= static_cast<double>(m.protocol(i, s).size());
      }
  return sp;
}

}  // namespace

double memoryless_strategy_count(const Icgs& m, const Formula& f) {
  return strategy_space(m, f).count;
}

StateSet memoryless_uniform_states(const Icgs& m, const Formula& f, std::size_t limit) {
  StrategySpace sp = strategy_space(m, f);
  if (sp.count > static_cast<double>(limit))
    throw SearchSpaceTooLarge("too many memoryless strategies: " + std::to_string(sp.count));
  const bool dual = f.op() == Op::StrategicDual;
  const Formula& psi = f.child(0);
  require_ltl(psi);
  // <<G>>: no path of the induced graph satisfies !psi.
  // [[G]]: some path of the induced graph satisfies psi.
  TableauLtl tableau(m, dual ? psi : Formula::negation(psi));

  const std::size_t n = m.num_states();
  std::map<std::pair<AgentIndex, StateIndex>, std::size_t> slot_of;
  for (std::size_t k = 0; k < sp.slots.size(); ++k) slot_of[sp.slots[k]] = k;
  std::vector<std::size_t> digit(sp.slots.size(), 0);
  StateSet result = dual ? StateSet::full(n) : StateSet(n);
  while (true) {
    std::vector<std::vector<StateIndex>> succ(n);
    for (StateIndex s = 0; s < n; ++s) {
      for (std::size_t k = 0; k < m.num_joint_actions(s); ++k) {
        JointAction a = m.joint_action(s, k);
        bool agrees = true;
        for (AgentIndex i : sp.coalition) {
          std::size_t slot = slot_of.at({i, m.indist_class(i, s)});
          if (a.choice[i] != (*sp.options[slot])[digit[slot]]) {
            agrees = false;
            break;
          }
        }
        if (agrees) succ[s].push_back(m.successor(s, k));
      }
      std::sort(succ[s].begin(), succ[s].end());
      succ[s].erase(std::unique(succ[s].begin(), succ[s].end()), succ[s].end());
    }
    StateSet paths = tableau.exists(succ);
    if (dual)
      result &= paths;
    else
      result |= paths.complement();

    std::size_t k = 0;
    for (; k < digit.size(); ++k) {
      if (++digit[k] < sp.options[k]->size()) break;
      digit[k] = 0;
    }
    if (k == digit.size()) break;
  }
  return result;
}

bool oracle_memoryless_uniform(const Icgs& m, const Formula& f, std::size_t limit) {
  return memoryless_uniform_states(m, f, limit).contains(m.initial());
}

// ---------------------------------------------------- product game oracle

namespace {

// Fully flattened operand list of an And/Or chain.
void operands(const Formula& f, Op op, std::vector<Formula>& out) {
  if (f.op() == op) {
    operands(f.lhs(), op, out);
    operands(f.rhs(), op, out);
  } else {
    out.push_back(f);
  }
}

// And/Or of `ops` with constants absorbed and operands sorted and
// deduplicated, so equivalent residuals usually share one shape.
Formula norm(Op op, const std::vector<Formula>& ops) {
  std::vector<Formula> flat;
  for (const auto& f : ops) operands(f, op, flat);
  const Op unit = op == Op::And ? Op::True : Op::False;
  const Op zero = op == Op::And ? Op::False : Op::True;
  std::vector<Formula> keep;
  for (auto& f : flat) {
    if (f.op() == zero) return f;
    if (f.op() != unit) keep.push_back(f);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) return op == Op::And ? Formula::top() : Formula::bottom();
  Formula acc = keep.back();
  for (std::size_t i = keep.size() - 1; i-- > 0;)
    acc = op == Op::And ? Formula::conj(keep[i], acc) : Formula::disj(keep[i], acc);
  return acc;
}

Formula progress(const Formula& f, const Icgs& m, StateIndex s) {
  switch (f.op()) {
    case Op::True:
    case Op::False: return f;
    case Op::Atom: {
      auto p = m.find_atom(f.name());
      return p && m.holds(s, *p) ? Formula::top() : Formula::bottom();
    }
    case Op::Not: {
      Formula c = progress(f.child(0), m, s);
      return c.op() == Op::True ? Formula::bottom() : Formula::top();
    }
    case Op::And:
    case Op::Or: {
      std::vector<Formula> ops;
      operands(f, f.op(), ops);
      for (auto& g : ops) g = progress(g, m, s);
      return norm(f.op(), ops);
    }
    case Op::Next: return f.child(0);
    case Op::Finally: return norm(Op::Or, {progress(f.child(0), m, s), f});
    case Op::Globally: return norm(Op::And, {progress(f.child(0), m, s), f});
    case Op::Until:
      return norm(Op::Or, {progress(f.rhs(), m, s), norm(Op::And, {progress(f.lhs(), m, s), f})});
    case Op::Release:
      return norm(Op::And, {progress(f.rhs(), m, s), norm(Op::Or, {progress(f.lhs(), m, s), f})});
    default: throw UnsupportedFormula("quantifier in a strategic body");
  }
}

// Minimal DNF over the non-boolean leaves, printed back with sorted
// operands. Residuals of a fixed body range over a finite set of leaves, so
// this keeps the set of positions finite.
Formula canonical(const Formula& f) {
  using Clause = std::set<Formula>;
  std::function<std::set<Clause>(const Formula&)> dnf = [&](const Formula& g) -> std::set<Clause> {
    switch (g.op()) {
      case Op::True: return {Clause{}};
      case Op::False: return {};
      case Op::Or: {
        auto a = dnf(g.lhs()), b = dnf(g.rhs());
        a.insert(b.begin(), b.end());
        return a;
      }
      case Op::And: {
        std::set<Clause> out;
        for (const auto& x : dnf(g.lhs()))
          for (const auto& y : dnf(g.rhs())) {
            Clause c = x;
            c.insert(y.begin(), y.end());
            out.insert(c);
          }
        return out;
      }
      default: return {Clause{g}};
    }
  };
  std::set<Clause> all = dnf(f);
  std::vector<Formula> disjuncts;
  for (const auto& c : all) {
    bool subsumed = std::any_of(all.begin(), all.end(), [&](const Clause& d) {
      return d != c && std::includes(c.begin(), c.end(), d.begin(), d.end());
    });
    if (!subsumed) disjuncts.push_back(norm(Op::And, std::vector<Formula>(c.begin(), c.end())));
  }
  return norm(Op::Or, disjuncts);
}

bool mentions(const Formula& f, std::initializer_list<Op> ops) {
  if (std::find(ops.begin(), ops.end(), f.op()) != ops.end()) return true;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (mentions(f.child(i), ops)) return true;
  return false;
}

}  // namespace

StateSet oracle_product_game(const Icgs& m, const Formula& f) {
  if (!f.is_strategic()) throw PreconditionError("expected <<G>>psi or [[G]]psi");
  Formula psi = to_nnf(f.child(0));
  require_ltl(psi);
  const bool eventual = mentions(psi, {Op::Until, Op::Finally});
  const bool invariant = mentions(psi, {Op::Release, Op::Globally});
  if (eventual && invariant) throw UnsupportedFormula("body mixes eventualities and invariants");
  const bool reach = !invariant;  // purely propositional or X-only bodies count as reach
  const bool dual = f.op() == Op::StrategicDual;
  std::vector<AgentIndex> coalition = resolve_agents(m, f.coalition());

  // Explore positions (state, residual).
  std::map<std::pair<StateIndex, Formula>, std::size_t> id;
  std::vector<std::pair<StateIndex, Formula>> pos;
  auto intern = [&](StateIndex s, Formula r) {
    auto [it, fresh] = id.try_emplace({s, r}, pos.size());
    if (fresh) pos.push_back({s, r});
    return it->second;
  };
  std::vector<std::size_t> start(m.num_states());
  for (StateIndex s = 0; s < m.num_states(); ++s) start[s] = intern(s, canonical(progress(psi, m, s)));
  // moves[p][profile] = successor positions under every completion.
  std::vector<std::vector<std::vector<std::size_t>>> moves;
  for (std::size_t p = 0; p < pos.size(); ++p) {
    auto [s, r] = pos[p];
    std::map<std::vector<ActionIndex>, std::vector<std::size_t>> by_profile;
    for (std::size_t k = 0; k < m.num_joint_actions(s); ++k) {
      JointAction a = m.joint_action(s, k);
      std::vector<ActionIndex> profile;
      for (AgentIndex i : coalition) profile.push_back(a.choice[i]);
      StateIndex t = m.successor(s, k);
      std::size_t q = intern(t, canonical(progress(r, m, t)));
      by_profile[profile].push_back(q);
    }
    std::vector<std::vector<std::size_t>> opts;
    for (auto& [profile, qs] : by_profile) opts.push_back(qs);
    moves.push_back(std::move(opts));
    if (pos.size() > 200000) throw SearchSpaceTooLarge("product game too large");
  }

  // target: residual true (reach) or not false (safe).
  std::vector<bool> win(pos.size());
  for (std::size_t p = 0; p < pos.size(); ++p)
    win[p] = reach ? pos[p].second.op() == Op::True : pos[p].second.op() != Op::False;
  auto ok = [&](std::size_t p) {
    auto all_in = [&](const std::vector<std::size_t>& qs) {
      return std::all_of(qs.begin(), qs.end(), [&](std::size_t q) { return win[q]; });
    };
    auto some_in = [&](const std::vector<std::size_t>& qs) {
      return std::any_of(qs.begin(), qs.end(), [&](std::size_t q) { return win[q]; });
    };
    if (!dual) return std::any_of(moves[p].begin(), moves[p].end(), all_in);
    return std::all_of(moves[p].begin(), moves[p].end(), some_in);
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < pos.size(); ++p) {
      if (reach && !win[p] && ok(p)) win[p] = changed = true;
      if (!reach && win[p] && !ok(p)) {
        win[p] = false;
        changed = true;
      }
    }
  }
  StateSet out(m.num_states());
  for (StateIndex s = 0; s < m.num_states(); ++s)
    if (win[start[s]]) out.insert(s);
  return out;
}

// ------------------------------------------------- perfect information IR

namespace {

StateSet ir_rec(Icgs& work, const Formula& f, std::size_t& fresh) {
  const std::size_t n = work.num_states();
  switch (f.op()) {
    case Op::True: return StateSet::full(n);
    case Op::False: return StateSet(n);
    case Op::Atom: {
      StateSet out(n);
      if (auto p = work.find_atom(f.name()))
        for (StateIndex s = 0; s < n; ++s)
          if (work.holds(s, *p)) out.insert(s);
      return out;
    }
    case Op::Not: return ir_rec(work, f.child(0), fresh).complement();
    case Op::And: return ir_rec(work, f.lhs(), fresh) & ir_rec(work, f.rhs(), fresh);
    case Op::Or: return ir_rec(work, f.lhs(), fresh) | ir_rec(work, f.rhs(), fresh);
    case Op::Strategic:
    case Op::StrategicDual: {
      auto decide = [&fresh](Icgs& w, const Formula& g) { return ir_rec(w, g, fresh); };
      Formula body = flatten_quantified(work, f.child(0), decide, fresh);
      return check_strategic(work, Formula::with_children(f, {body}));
    }
    default:
      throw UnsupportedFormula("perfect_information_check: unexpected operator in " + f.to_string());
  }
}

}  // namespace

bool perfect_information_check(const Icgs& m, const Formula& f) {
  Icgs work = m.with_perfect_information();
  std::size_t fresh = 0;
  return ir_rec(work, to_nnf(f), fresh).contains(work.initial());
}

}  // namespace submc
