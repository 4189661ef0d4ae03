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


/// \file game.hpp
/// \brief Strategic model checking under perfect information and perfect
/// recall for one strategic operator over atomic state arguments.
#pragma once

#include <vector>

#include "submc/formula.hpp"
#include "submc/icgs.hpp"

namespace submc {

enum class PathClass { AtlFragment, CoSafety, Safety, Unsupported };

const char* to_string(PathClass c);

/// Class of a strategic body. Bodies without temporal operators count as
/// CoSafety; bodies with quantifiers are Unsupported.
PathClass classify_path_formula(const Formula& psi);

/// { s | some coalition profile at s forces every completion into target }.
StateSet controllable_pre(const Icgs& m, const std::vector<AgentIndex>& coalition,
                          const StateSet& target);

/// { s | every coalition profile at s has a completion into target }.
StateSet adversarial_pre(const Icgs& m, const std::vector<AgentIndex>& coalition,
                         const StateSet& target);

/// Satisfaction set of a boolean combination of atoms.
StateSet eval_boolean(const Icgs& m, const Formula& f);

/// `kind` is Op::Strategic or Op::StrategicDual; `psi` must classify as
/// AtlFragment.
StateSet check_atl_fragment(const Icgs& m, Op kind, const std::vector<AgentIndex>& coalition,
                            const Formula& psi);

/// Satisfaction set of `f` = <<G>>psi or [[G]]psi. Coalition agents must
/// have perfect information in `m` (PreconditionError otherwise); other
/// agents' indistinguishability is ignored. Throws UnsupportedFormula for
/// bodies outside the ATL, co-safety and safety classes.
StateSet check_strategic(const Icgs& m, const Formula& f);

}  // namespace submc
