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


/// \file automata.hpp
/// \brief Word automata for LTL path formulas over a fixed atom list.
///
/// Both automata are built on the fly by formula progression: a state is a
/// disjunction of clauses, each clause a set of "obligations" (literals and
/// temporal formulas that must hold from the current letter on). Letters
/// are bit masks over the atom list, so nothing ranges over 2^AP unless a
/// caller asks for materialization.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "submc/formula.hpp"

namespace submc {

using Letter = std::uint64_t;

/// Interned obligations and the progression rules shared by both automata.
class Progression {
 public:
  using Clause = std::vector<int>;  // sorted obligation ids
  using Dnf = std::vector<Clause>;  // minimal under inclusion; {} false, {{}} true

  /// `atoms` fixes the bit of each atom in a Letter; at most 64.
  explicit Progression(std::vector<std::string> atoms);

  const std::vector<std::string>& atoms() const { return atoms_; }
  /// DNF of a path formula in NNF. Unknown atoms raise NameError.
  Dnf expand(const Formula& f);
  /// Obligations of `c` read through one letter.
  Dnf step(const Clause& c, Letter a);
  /// One obligation read through one letter.
  const Dnf& progress(int obligation, Letter a);

  const Formula& obligation(int id) const { return obligations_.at(id); }
  /// Ids of U and F obligations created so far.
  const std::vector<int>& eventualities() const { return eventualities_; }

  static Dnf disj(const Dnf& a, const Dnf& b);
  static Dnf conj(const Dnf& a, const Dnf& b);

 private:
  int intern(const Formula& f);
  bool literal_holds(const Formula& lit, Letter a) const;

  std::vector<std::string> atoms_;
  std::map<std::string, int> atom_bit_;
  std::vector<Formula> obligations_;
  std::map<Formula, int> ids_;
  std::vector<int> eventualities_;
  std::map<std::pair<int, Letter>, Dnf> cache_;
};

enum class Acceptance { Reach, Safe };

/// Deterministic automaton for a co-safety (Reach) or safety (Safe) path
/// formula. States are interned disjunctions; the all-true state accepts
/// and the all-false state is the trap.
class ObjectiveAutomaton {
 public:
  using State = std::size_t;

  ObjectiveAutomaton(const Formula& psi, std::vector<std::string> atoms, Acceptance kind);

  Acceptance kind() const { return kind_; }
  const std::vector<std::string>& atoms() const { return prog_->atoms(); }
  State initial() const { return 0; }
  State step(State q, Letter a);
  bool is_true(State q) const { return states_.at(q).size() == 1 && states_[q][0].empty(); }
  bool is_false(State q) const { return states_.at(q).empty(); }
  /// Reach: q is the true state. Safe: q is not the trap.
  bool accepting(State q) const { return kind_ == Acceptance::Reach ? is_true(q) : !is_false(q); }

  /// States discovered so far.
  std::size_t num_states() const { return states_.size(); }
  /// Explores every letter from every state, 2^|atoms| per state.
  void materialize();
  /// Whether the infinite word u v^omega is accepted.
  bool accepts_lasso(const std::vector<Letter>& prefix, const std::vector<Letter>& cycle);
  std::string describe(State q) const;

 private:
  State intern(Progression::Dnf d);

  Acceptance kind_;
  std::unique_ptr<Progression> prog_;
  std::vector<Progression::Dnf> states_;
  std::map<Progression::Dnf, State> index_;
  std::map<std::pair<State, Letter>, State> delta_;
};

/// Builds and materializes the automaton. Throws UnsupportedFormula when
/// `psi` is not co-safety (Reach) or safety (Safe) shaped.
ObjectiveAutomaton ltl_to_dfa(const Formula& psi, std::vector<std::string> atoms, Acceptance kind);

/// Nondeterministic Büchi automaton with transition-based generalized
/// acceptance: one acceptance bit per eventuality (U or F obligation). A
/// transition carries bit j when eventuality j is absent from the target
/// or could have been discharged on that step.
class BuchiAutomaton {
 public:
  using State = std::size_t;
  struct Edge {
    State to;
    std::uint64_t acc;
  };

  BuchiAutomaton(const Formula& psi, std::vector<std::string> atoms);

  const std::vector<std::string>& atoms() const { return prog_->atoms(); }
  const std::vector<State>& initial() const { return initial_; }
  const std::vector<Edge>& edges(State q, Letter a);
  /// Number of acceptance bits; fixed at construction.
  std::size_t num_acceptance() const { return eventualities_.size(); }
  std::uint64_t full_acceptance() const;
  std::size_t num_states() const { return states_.size(); }
  void materialize();
  std::string describe(State q) const;

 private:
  State intern(Progression::Clause c);

  std::unique_ptr<Progression> prog_;
  std::vector<int> eventualities_;
  std::vector<Progression::Clause> states_;
  std::map<Progression::Clause, State> index_;
  std::vector<State> initial_;
  std::map<std::pair<State, Letter>, std::vector<Edge>> delta_;
};

/// NNF form of `psi` with its obligation closure expanded up front so the
/// acceptance bits are fixed; the result is materialized over `atoms`.
BuchiAutomaton ltl_to_nba(const Formula& psi, std::vector<std::string> atoms);

}  // namespace submc
