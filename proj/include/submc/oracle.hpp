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


/// \file oracle.hpp
/// \brief Brute-force reference checkers, used by tests and by the
/// experiment's consistency checks. They share no automaton code with the
/// production checkers and are only meant for small models.
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "submc/ctlstar.hpp"
#include "submc/formula.hpp"
#include "submc/icgs.hpp"

namespace submc {

using LabelSet = std::set<std::string>;

/// Value of the LTL formula psi (atoms, booleans, temporal operators) at
/// the first position of the word prefix cycle^omega.
bool eval_word(const std::vector<LabelSet>& prefix, const std::vector<LabelSet>& cycle,
               const Formula& psi);
/// eval_word on the labels of a path of `m`.
bool lasso_eval(const Icgs& m, const Lasso& path, const Formula& psi);

/// Whether some lasso from s with prefix plus cycle length at most `bound`
/// satisfies psi. A zero bound means |S| * (|closure(psi)| + 1). Throws
/// SearchSpaceTooLarge after `budget` lassos.
bool oracle_lasso_ltl(const Icgs& m, StateIndex s, const Formula& psi, std::size_t bound = 0,
                      std::size_t budget = 2'000'000);

/// Atom-graph (tableau) decision of "some path satisfies psi" over a given
/// successor relation. Nodes pair a state with a truth assignment to the
/// next-step obligations of psi; eventualities are enforced by requiring a
/// fair strongly connected component.
class TableauLtl {
 public:
  TableauLtl(const Icgs& m, const Formula& psi);
  /// States with a psi-path when state s may move to any of succ[s].
  StateSet exists(const std::vector<std::vector<StateIndex>>& succ) const;
  /// Same, over the model's own transitions.
  StateSet exists() const;

 private:
  bool value(const Formula& f, StateIndex s, std::uint64_t a) const;

  const Icgs* m_;
  Formula psi_;
  std::vector<Formula> temporal_;      // obligation k belongs to temporal_[k]
  std::vector<std::size_t> eventual_;  // indices of U and F obligations
  std::size_t assignments_;
  // For each (state, assignment): required predecessor assignment, psi
  // value, and fulfilled eventualities.
  std::vector<std::uint64_t> mask_;
  std::vector<bool> psi_value_;
  std::vector<std::uint64_t> fulfilled_;
  // by_mask_[t * assignments_ + a]: nodes (t, b) whose mask is a.
  std::vector<std::vector<std::size_t>> by_mask_;
};

/// Reference CTL* satisfaction set; quantified sub-formulas are decided
/// innermost first with TableauLtl. Strategic operators are not allowed.
StateSet oracle_ctlstar(const Icgs& m, const Formula& f);

/// States where some uniform memoryless strategy of the coalition of
/// f = <<G>>psi wins every compatible path (for [[G]]psi: where every such
/// strategy leaves a psi-path). Uniform means constant on each ~_i class.
/// Throws SearchSpaceTooLarge when the number of strategies exceeds `limit`.
StateSet memoryless_uniform_states(const Icgs& m, const Formula& f,
                                   std::size_t limit = 1'000'000);
bool oracle_memoryless_uniform(const Icgs& m, const Formula& f,
                               std::size_t limit = 1'000'000);

/// Number of uniform memoryless strategies of the coalition of f.
double memoryless_strategy_count(const Icgs& m, const Formula& f);

/// Perfect-information satisfaction set of a single-operator formula whose
/// body is co-safety (no G, R) or safety (no F, U), solved on the product
/// of the model with residual formulas obtained by syntactic progression.
/// Throws UnsupportedFormula for other bodies.
StateSet oracle_product_game(const Icgs& m, const Formula& f);

/// Whether f holds at the initial state when every agent has perfect
/// information. Strategic operators are decided innermost first with
/// check_strategic.
bool perfect_information_check(const Icgs& m, const Formula& f);

}  // namespace submc
