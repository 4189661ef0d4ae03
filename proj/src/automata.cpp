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


#include "submc/automata.hpp"

#include <algorithm>
#include <set>

#include "submc/errors.hpp"
#include "submc/transform.hpp"

namespace submc {

namespace {

using Clause = Progression::Clause;
using Dnf = Progression::Dnf;

const Dnf kTrue{Clause{}};
const Dnf kFalse{};

Clause merge(const Clause& a, const Clause& b) {
  Clause out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Dnf minimize(Dnf d) {
  std::sort(d.begin(), d.end(), [](const Clause& x, const Clause& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  Dnf out;
  for (auto& c : d) {
    bool subsumed = std::any_of(out.begin(), out.end(), [&](const Clause& k) {
      return std::includes(c.begin(), c.end(), k.begin(), k.end());
    });
    if (!subsumed) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_literal(const Formula& f) {
  return f.op() == Op::Atom || (f.op() == Op::Not && f.lhs().op() == Op::Atom);
}

void collect_eventualities(const Formula& f, std::vector<Formula>& out) {
  for (std::size_t i = 0; i < f.arity(); ++i) collect_eventualities(f.child(i), out);
  if ((f.op() == Op::Until || f.op() == Op::Finally) &&
      std::find(out.begin(), out.end(), f) == out.end())
    out.push_back(f);
}

}  // namespace

Progression::Progression(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.size() > 64) throw UnsupportedFormula("more than 64 atoms in a path formula");
  for (std::size_t i = 0; i < atoms_.size(); ++i) atom_bit_[atoms_[i]] = static_cast<int>(i);
}

Dnf Progression::disj(const Dnf& a, const Dnf& b) {
  Dnf out = a;
  out.insert(out.end(), b.begin(), b.end());
  return minimize(std::move(out));
}

Dnf Progression::conj(const Dnf& a, const Dnf& b) {
  if (a.empty() || b.empty()) return kFalse;
  Dnf out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(merge(x, y));
  return minimize(std::move(out));
}

int Progression::intern(const Formula& f) {
  if (auto it = ids_.find(f); it != ids_.end()) return it->second;
  if (is_literal(f)) {
    const std::string& a = f.op() == Op::Atom ? f.name() : f.lhs().name();
    if (!atom_bit_.contains(a)) throw NameError("atom '" + a + "' is not in the automaton alphabet");
  }
  int id = static_cast<int>(obligations_.size());
  obligations_.push_back(f);
  ids_.emplace(f, id);
  if (f.op() == Op::Until || f.op() == Op::Finally) eventualities_.push_back(id);
  return id;
}

bool Progression::literal_holds(const Formula& lit, Letter a) const {
  if (lit.op() == Op::Atom) return (a >> atom_bit_.at(lit.name())) & 1U;
  return !((a >> atom_bit_.at(lit.lhs().name())) & 1U);
}

Dnf Progression::expand(const Formula& f) {
  switch (f.op()) {
    case Op::True:
      return kTrue;
    case Op::False:
      return kFalse;
    case Op::And:
      return conj(expand(f.lhs()), expand(f.rhs()));
    case Op::Or:
      return disj(expand(f.lhs()), expand(f.rhs()));
    case Op::Not:
      if (f.lhs().op() != Op::Atom) throw std::invalid_argument("path formula is not in NNF");
      return {{intern(f)}};
    case Op::Strategic:
    case Op::StrategicDual:
    case Op::ForAll:
    case Op::Exists:
      throw UnsupportedFormula("quantified sub-formula inside a path formula: " + f.to_string());
    default:
      return {{intern(f)}};
  }
}

const Dnf& Progression::progress(int obligation, Letter a) {
  auto key = std::pair{obligation, a};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  // Progression of an arbitrary sub-formula through the same letter.
  auto now = [&](const Formula& g) -> Dnf {
    Dnf out;
    for (const auto& c : expand(g)) {
      Dnf acc = kTrue;
      for (int e : c) {
        acc = conj(acc, progress(e, a));
        if (acc.empty()) break;
      }
      out.insert(out.end(), acc.begin(), acc.end());
    }
    return minimize(std::move(out));
  };

  const Formula f = obligations_.at(obligation);
  Dnf self{{obligation}};
  Dnf result;
  switch (f.op()) {
    case Op::Atom:
    case Op::Not:
      result = literal_holds(f, a) ? kTrue : kFalse;
      break;
    case Op::Next:
      result = expand(f.lhs());
      break;
    case Op::Until:
      result = disj(now(f.rhs()), conj(now(f.lhs()), self));
      break;
    case Op::Release:
      result = conj(now(f.rhs()), disj(now(f.lhs()), self));
      break;
    case Op::Finally:
      result = disj(now(f.lhs()), self);
      break;
    case Op::Globally:
      result = conj(now(f.lhs()), self);
      break;
    default:
      throw std::logic_error("progress: not an obligation: " + f.to_string());
  }
  return cache_.emplace(key, std::move(result)).first->second;
}

Dnf Progression::step(const Clause& c, Letter a) {
  Dnf acc = kTrue;
  for (int e : c) {
    acc = conj(acc, progress(e, a));
    if (acc.empty()) break;
  }
  return acc;
}

// ---------------------------------------------------------------------------

ObjectiveAutomaton::ObjectiveAutomaton(const Formula& psi, std::vector<std::string> atoms,
                                       Acceptance kind)
    : kind_(kind), prog_(std::make_unique<Progression>(std::move(atoms))) {
  intern(prog_->expand(to_nnf(psi)));
}

ObjectiveAutomaton::State ObjectiveAutomaton::intern(Progression::Dnf d) {
  if (auto it = index_.find(d); it != index_.end()) return it->second;
  State q = states_.size();
  index_.emplace(d, q);
  states_.push_back(std::move(d));
  return q;
}

ObjectiveAutomaton::State ObjectiveAutomaton::step(State q, Letter a) {
  auto key = std::pair{q, a};
  if (auto it = delta_.find(key); it != delta_.end()) return it->second;
  Dnf next;
  for (const auto& c : states_.at(q)) {
    Dnf d = prog_->step(c, a);
    next.insert(next.end(), d.begin(), d.end());
  }
  State r = intern(minimize(std::move(next)));
  delta_.emplace(key, r);
  return r;
}

void ObjectiveAutomaton::materialize() {
  const Letter letters = Letter{1} << atoms().size();
  for (State q = 0; q < states_.size(); ++q)
    for (Letter a = 0; a < letters; ++a) step(q, a);
}

bool ObjectiveAutomaton::accepts_lasso(const std::vector<Letter>& prefix,
                                       const std::vector<Letter>& cycle) {
  State q = initial();
  auto bad = [&](State s) { return kind_ == Acceptance::Reach ? is_true(s) : is_false(s); };
  // Reach: accepted iff the true state is met; Safe: iff the trap never is.
  if (bad(q)) return kind_ == Acceptance::Reach;
  for (Letter a : prefix) {
    q = step(q, a);
    if (bad(q)) return kind_ == Acceptance::Reach;
  }
  std::set<State> seen;
  while (seen.insert(q).second) {
    for (Letter a : cycle) {
      q = step(q, a);
      if (bad(q)) return kind_ == Acceptance::Reach;
    }
  }
  return kind_ == Acceptance::Safe;
}

std::string ObjectiveAutomaton::describe(State q) const {
  const auto& d = states_.at(q);
  if (d.empty()) return "false";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += i ? " | " : "";
    out += "{";
    for (std::size_t j = 0; j < d[i].size(); ++j)
      out += (j ? ", " : "") + prog_->obligation(d[i][j]).to_string();
    out += "}";
  }
  return out;
}

namespace {

bool co_safety_shape(const Formula& f) {
  switch (f.op()) {
    case Op::Release:
    case Op::Globally:
    case Op::Strategic:
    case Op::StrategicDual:
    case Op::ForAll:
    case Op::Exists:
      return false;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!co_safety_shape(f.child(i))) return false;
  return true;
}

bool safety_shape(const Formula& f) {
  switch (f.op()) {
    case Op::Until:
    case Op::Finally:
    case Op::Strategic:
    case Op::StrategicDual:
    case Op::ForAll:
    case Op::Exists:
      return false;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!safety_shape(f.child(i))) return false;
  return true;
}

}  // namespace

ObjectiveAutomaton ltl_to_dfa(const Formula& psi, std::vector<std::string> atoms, Acceptance kind) {
  Formula n = to_nnf(psi);
  if (kind == Acceptance::Reach ? !co_safety_shape(n) : !safety_shape(n))
    throw UnsupportedFormula(std::string("not a ") +
                             (kind == Acceptance::Reach ? "co-safety" : "safety") +
                             " formula: " + psi.to_string());
  ObjectiveAutomaton dfa(n, std::move(atoms), kind);
  dfa.materialize();
  return dfa;
}

// ---------------------------------------------------------------------------

BuchiAutomaton::BuchiAutomaton(const Formula& psi, std::vector<std::string> atoms)
    : prog_(std::make_unique<Progression>(std::move(atoms))) {
  Formula n = to_nnf(psi);
  std::vector<Formula> ev;
  collect_eventualities(n, ev);
  if (ev.size() > 64) throw UnsupportedFormula("more than 64 eventualities");
  for (const auto& e : ev) eventualities_.push_back(prog_->expand(e).front().front());
  for (auto& c : prog_->expand(n)) initial_.push_back(intern(std::move(c)));
}

BuchiAutomaton::State BuchiAutomaton::intern(Progression::Clause c) {
  if (auto it = index_.find(c); it != index_.end()) return it->second;
  State q = states_.size();
  index_.emplace(c, q);
  states_.push_back(std::move(c));
  return q;
}

std::uint64_t BuchiAutomaton::full_acceptance() const {
  return eventualities_.size() == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << eventualities_.size()) - 1;
}

const std::vector<BuchiAutomaton::Edge>& BuchiAutomaton::edges(State q, Letter a) {
  auto key = std::pair{q, a};
  if (auto it = delta_.find(key); it != delta_.end()) return it->second;
  const Clause src = states_.at(q);
  std::vector<Edge> out;
  for (auto& target : prog_->step(src, a)) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < eventualities_.size(); ++j) {
      int u = eventualities_[j];
      bool fulfilled = !std::binary_search(target.begin(), target.end(), u);
      if (!fulfilled)
        for (const auto& y : prog_->progress(u, a))
          if (!std::binary_search(y.begin(), y.end(), u) &&
              std::includes(target.begin(), target.end(), y.begin(), y.end())) {
            fulfilled = true;
            break;
          }
      if (fulfilled) acc |= std::uint64_t{1} << j;
    }
    out.push_back({intern(std::move(target)), acc});
  }
  return delta_.emplace(key, std::move(out)).first->second;
}

void BuchiAutomaton::materialize() {
  const Letter letters = Letter{1} << atoms().size();
  for (State q = 0; q < states_.size(); ++q)
    for (Letter a = 0; a < letters; ++a) edges(q, a);
}

std::string BuchiAutomaton::describe(State q) const {
  std::string out = "{";
  const auto& c = states_.at(q);
  for (std::size_t j = 0; j < c.size(); ++j)
    out += (j ? ", " : "") + prog_->obligation(c[j]).to_string();
  return out + "}";
}

BuchiAutomaton ltl_to_nba(const Formula& psi, std::vector<std::string> atoms) {
  BuchiAutomaton nba(psi, std::move(atoms));
  nba.materialize();
  return nba;
}

}  // namespace submc
