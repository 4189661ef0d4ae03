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


/// \file transform.hpp
/// \brief Rewrites on formulas: NNF, negated-atom replacement, sub-formula
/// extraction and substitution, and strategic-to-path translation.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "submc/formula.hpp"

namespace submc {

/// Pushes negations down to atoms. Constants absorb negation.
Formula to_nnf(const Formula& f);

bool is_nnf(const Formula& f);

/// True when no Not node occurs.
bool is_negation_free(const Formula& f);

/// Atoms occurring directly under Not, in first-occurrence order.
std::vector<std::string> extract_negated_atoms(const Formula& f);

Formula replace_negated_atom(const Formula& f, const std::string& p, const std::string& np);

/// Sorted union of the coalitions of all strategic nodes.
std::vector<std::string> coalition_agents(const Formula& f);

/// Replaces every occurrence of `target` (exact shape) with Atom(atom).
Formula update_formula(const Formula& f, const Formula& target, const std::string& atom);

/// Replaces every Atom(atom) with `replacement`.
Formula substitute_atom(const Formula& f, const std::string& atom, const Formula& replacement);

enum class Variant { Negative, Positive };

/// Negative: every strategic node becomes A; positive: becomes E.
Formula atl_to_ctl(const Formula& f, Variant v);

struct SubformulaNode {
  std::size_t id;          // 1-based post-order index
  std::string atom;        // `<prefix>_<id>`
  Formula formula;         // one strategic operator, children collapsed to atoms
  Formula original;        // the full sub-formula it stands for
  std::vector<std::size_t> children;  // ids of directly nested nodes
};

struct SubformulaTree {
  std::string prefix;  // "atom", lengthened if it collides with existing atoms
  std::vector<SubformulaNode> nodes;  // leaves first
  Formula residue;                    // root with every node collapsed

  std::string atom(std::size_t id) const;
  std::string variant_atom(std::size_t id, Variant v) const;
};

/// Post-order extraction of strategic sub-formulas. Identical sub-formulas
/// share a node. `reserved` lists names the fresh atoms must avoid, in
/// addition to the atoms of `f`.
SubformulaTree subformulas(const Formula& f, const std::set<std::string>& reserved = {});

/// Picks a name not in `taken`: `base`, then `base_1`, `base_2`, ...
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

}  // namespace submc
