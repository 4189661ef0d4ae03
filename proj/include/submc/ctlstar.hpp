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


/// \file ctlstar.hpp
/// \brief Explicit-state CTL* model checking via Büchi products.
///
/// Paths follow every enabled joint action; indistinguishability and
/// coalitions play no role here.
#pragma once

#include <optional>
#include <vector>

#include "submc/formula.hpp"
#include "submc/icgs.hpp"

namespace submc {

/// Ultimately periodic path: prefix, then cycle repeated forever.
struct Lasso {
  std::vector<StateIndex> prefix;
  std::vector<StateIndex> cycle;  // non-empty
};

/// Whether some path from s satisfies the LTL formula psi (atoms only).
bool exists_path(const Icgs& m, StateIndex s, const Formula& psi);

/// A witness path for exists_path, found by nested depth-first search.
std::optional<Lasso> find_path(const Icgs& m, StateIndex s, const Formula& psi);

/// All states with a path satisfying psi, by SCC analysis of the product.
StateSet exists_path_states(const Icgs& m, const Formula& psi);

/// Satisfaction set of a CTL* state formula (A, E, booleans, atoms).
/// Strategic operators raise UnsupportedFormula.
StateSet sat_ctlstar(const Icgs& m, const Formula& f);

bool check_ctlstar(const Icgs& m, StateIndex s, const Formula& f);

}  // namespace submc
