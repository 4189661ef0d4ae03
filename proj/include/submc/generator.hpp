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


/// \file generator.hpp
/// \brief Seeded random iCGS generation.
#pragma once

#include <cstdint>
#include <string>

#include "submc/icgs.hpp"

namespace submc {

enum class Topology {
  Uniform,  // successors uniform over all states
  Layered,  // mission-like: states split in layers, moves go forward
  Mixed,    // Layered with probability layered_fraction, else Uniform
};

const char* to_string(Topology t);
Topology topology_from_string(const std::string& s);

/// Agents are a0, a1, ... with actions x0, x1, ...; states s0 (initial),
/// s1, ...; atoms p0, p1, ...
struct GeneratorConfig {
  std::size_t states = 6;
  std::size_t agents = 2;
  std::size_t actions_per_agent = 2;
  /// Chance that an action is enabled in a protocol entry; one action is
  /// always enabled.
  double protocol_density = 1.0;
  std::size_t atom_count = 3;
  double label_density = 0.4;
  /// Per agent, this percentage of the unordered state pairs is sampled
  /// and merged into indistinguishability classes. 0 gives identity, 100
  /// the total relation.
  double pi_percent = 0;
  Topology topology = Topology::Mixed;
  double layered_fraction = 0.25;
  std::uint64_t seed = 0;
};

/// Valid by construction: protocols are drawn per indistinguishability
/// class of their agent, and every enabled joint action gets exactly one
/// successor. Equal configs give identical models.
Icgs random_icgs(const GeneratorConfig& cfg);

/// A few hundred states and a dozen agents, layered, with sparse
/// protocols and a little imperfect information.
GeneratorConfig rover_large_preset(std::uint64_t seed);

/// Stateless 64-bit mixer for deriving independent seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace submc
