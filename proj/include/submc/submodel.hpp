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


/// \file submodel.hpp
/// \brief Preprocessing and enumeration of perfect-information sub-models.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submc/formula.hpp"
#include "submc/icgs.hpp"

namespace submc {

struct PreprocessedProblem {
  Icgs model;
  Formula formula;  // NNF, negation-free
  std::vector<std::pair<std::string, std::string>> atom_map;  // p -> np
};

/// Rewrites `f` to NNF and replaces each negated atom p by a fresh atom
/// labelling exactly the states where p is false. Unknown atoms or agents
/// in `f` raise NameError.
PreprocessedProblem preprocess(const Icgs& m, const Formula& f);

enum class SubModelKind { Negative, Positive };

/// Restriction of a base model to `core` plus one absorbing sink. States of
/// `model` are the core states in base order followed by the sink.
struct SubModel {
  Icgs model;
  StateSet core;  // over base states
  StateIndex sink;
  SubModelKind kind;
  std::vector<StateIndex> to_base;  // sub state -> base state; sink maps to npos
  std::vector<std::optional<StateIndex>> from_base;

  static constexpr StateIndex npos = static_cast<StateIndex>(-1);

  /// Adds an atom; the positive sink is labelled with it immediately.
  AtomIndex add_atom(const std::string& name);
};

/// Sink named s_bot, unlabelled. Throws InitialStateRemoved when the base
/// initial state is outside `core`.
SubModel generate_negative(const Icgs& m, const StateSet& core);
/// Sink named s_top, labelled with every atom.
SubModel generate_positive(const Icgs& m, const StateSet& core);

struct CandidatePair {
  StateSet core;
  SubModel neg;
  SubModel pos;
};

struct EnumerationStats {
  std::size_t explored = 0;           // distinct cores popped
  std::size_t discarded_initial = 0;  // cores without the initial state
  std::size_t duplicates = 0;
};

/// Conflict-free cores reachable by repeatedly dropping one side of the
/// least pair s ~_i s' (s < s', i in `agents`), in discovery order.
std::vector<StateSet> enumerate_cores(const Icgs& m, const std::vector<AgentIndex>& agents,
                                      EnumerationStats* stats = nullptr);

/// Agent indices for the names in `names`; NameError on unknown names.
std::vector<AgentIndex> resolve_agents(const Icgs& m, const std::vector<std::string>& names);

std::vector<CandidatePair> find_submodels(const Icgs& m, const Formula& f,
                                          EnumerationStats* stats = nullptr);

}  // namespace submc
