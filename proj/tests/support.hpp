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


// Shared helpers for the test binaries: fixtures and random inputs.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "submc/formula.hpp"
#include "submc/generator.hpp"
#include "submc/icgs.hpp"
#include "submc/model_io.hpp"

namespace submc::testing {

inline std::string fixture(const std::string& name) {
  return std::string(SUBMC_FIXTURE_DIR) + "/" + name;
}

inline Icgs rover() { return load_model_file(fixture("rover.json")); }

inline const std::vector<std::string>& rover_formulas() {
  static const std::vector<std::string> f{
      "<<rover>> F ((oc & rm) & F ((pl | pr) & F (oc & rm)))",
      "<<rover,mechanic>> F ((oc & rm) & <<rover>> F ((pl | pr) & F (oc & rm)))",
      "<<rover,mechanic>> F (rp & !ip & <<rover>> F ((pl | pr) & F (oc & rm)))",
  };
  return f;
}

inline StateSet states(const Icgs& m, std::initializer_list<const char*> names) {
  StateSet out(m.num_states());
  for (const char* n : names) out.insert(m.state_index(n));
  return out;
}

inline std::vector<std::string> names(const Icgs& m, const StateSet& set) {
  std::vector<std::string> out;
  for (StateIndex s : set.elements()) out.push_back(m.state_name(s));
  return out;
}

inline Formula pick_atom(const std::vector<std::string>& atoms, std::mt19937_64& rng) {
  return Formula::atom(atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)]);
}

/// Literal or small boolean combination of atoms.
inline Formula random_boolean(const std::vector<std::string>& atoms, std::mt19937_64& rng,
                              int depth = 1) {
  std::uniform_int_distribution<int> d(0, depth > 0 ? 5 : 2);
  switch (d(rng)) {
    case 0:
    case 1: return pick_atom(atoms, rng);
    case 2: return Formula::negation(pick_atom(atoms, rng));
    case 3: return Formula::conj(random_boolean(atoms, rng, depth - 1), random_boolean(atoms, rng, depth - 1));
    case 4: return Formula::disj(random_boolean(atoms, rng, depth - 1), random_boolean(atoms, rng, depth - 1));
    default: return std::bernoulli_distribution(0.5)(rng) ? Formula::top() : Formula::bottom();
  }
}

/// LTL formula over atoms with nesting depth at most `depth`.
inline Formula random_ltl(const std::vector<std::string>& atoms, std::mt19937_64& rng, int depth) {
  if (depth <= 0) return random_boolean(atoms, rng, 0);
  auto sub = [&] { return random_ltl(atoms, rng, depth - 1); };
  switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
    case 0: return random_boolean(atoms, rng, 0);
    case 1: return Formula::next(sub());
    case 2: return Formula::finally(sub());
    case 3: return Formula::globally(sub());
    case 4: return Formula::until(sub(), sub());
    case 5: return Formula::release(sub(), sub());
    case 6: return Formula::conj(sub(), sub());
    case 7: return Formula::disj(sub(), sub());
    case 8: return Formula::negation(sub());
    default: return Formula::finally(Formula::conj(random_boolean(atoms, rng, 0), sub()));
  }
}

/// CTL* state formula with quantifier/temporal nesting at most `depth`.
inline Formula random_ctlstar(const std::vector<std::string>& atoms, std::mt19937_64& rng, int depth);

inline Formula random_ctl_path(const std::vector<std::string>& atoms, std::mt19937_64& rng, int depth) {
  if (depth <= 0) return random_boolean(atoms, rng, 0);
  auto sub = [&] { return random_ctl_path(atoms, rng, depth - 1); };
  switch (std::uniform_int_distribution<int>(0, 8)(rng)) {
    case 0: return random_ctlstar(atoms, rng, depth - 1);
    case 1: return Formula::next(sub());
    case 2: return Formula::finally(sub());
    case 3: return Formula::globally(sub());
    case 4: return Formula::until(sub(), sub());
    case 5: return Formula::release(sub(), sub());
    case 6: return Formula::conj(sub(), sub());
    case 7: return Formula::disj(sub(), sub());
    default: return Formula::negation(sub());
  }
}

inline Formula random_ctlstar(const std::vector<std::string>& atoms, std::mt19937_64& rng, int depth) {
  if (depth <= 0) return random_boolean(atoms, rng, 0);
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return random_boolean(atoms, rng, 1);
    case 1:
    case 2: return Formula::exists(random_ctl_path(atoms, rng, depth - 1));
    case 3: return Formula::forall(random_ctl_path(atoms, rng, depth - 1));
    case 4: return Formula::conj(random_ctlstar(atoms, rng, depth - 1), random_ctlstar(atoms, rng, depth - 1));
    default: return Formula::negation(random_ctlstar(atoms, rng, depth - 1));
  }
}

/// Co-safety body (X, F, U over literals, no G or R).
inline Formula random_cosafety(const std::vector<std::string>& atoms, std::mt19937_64& rng, int depth) {
  if (depth <= 0) return random_boolean(atoms, rng, 0);
  auto sub = [&] { return random_cosafety(atoms, rng, depth - 1); };
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return Formula::next(sub());
    case 1: return Formula::finally(sub());
    case 2: return Formula::until(sub(), sub());
    case 3: return Formula::disj(sub(), sub());
    case 4: return Formula::finally(Formula::conj(random_boolean(atoms, rng, 0), sub()));
    default: return Formula::conj(sub(), sub());
  }
}

/// Safety body (X, G, R over literals, no F or U).
inline Formula random_safety(const std::vector<std::string>& atoms, std::mt19937_64& rng, int depth) {
  if (depth <= 0) return random_boolean(atoms, rng, 0);
  auto sub = [&] { return random_safety(atoms, rng, depth - 1); };
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return Formula::next(sub());
    case 1: return Formula::globally(sub());
    case 2: return Formula::release(sub(), sub());
    case 3: return Formula::disj(sub(), sub());
    case 4: return Formula::globally(Formula::disj(random_boolean(atoms, rng, 0), sub()));
    default: return Formula::conj(sub(), sub());
  }
}

/// X b, b U b or b R b over boolean combinations of atoms.
inline Formula random_atl_body(const std::vector<std::string>& atoms, std::mt19937_64& rng) {
  auto b = [&] { return random_boolean(atoms, rng, 1); };
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return Formula::next(b());
    case 1: return Formula::until(b(), b());
    case 2: return Formula::release(b(), b());
    case 3: return Formula::finally(b());
    default: return Formula::globally(b());
  }
}

/// Random coalition over the model's agents and a random strategic kind.
inline Formula random_strategic(const Icgs& m, const Formula& body, std::mt19937_64& rng) {
  std::vector<std::string> g;
  for (AgentIndex i = 0; i < m.num_agents(); ++i)
    if (std::bernoulli_distribution(0.5)(rng)) g.push_back(m.agent(i).name);
  return std::bernoulli_distribution(0.5)(rng) ? Formula::strategic(g, body)
                                               : Formula::strategic_dual(g, body);
}

/// Small random model; identity indistinguishability unless pi > 0.
inline Icgs small_model(std::uint64_t seed, std::size_t max_states = 6, double pi = 0,
                        std::size_t agents = 2, std::size_t actions = 2) {
  std::mt19937_64 rng(seed);
  GeneratorConfig cfg;
  cfg.states = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  cfg.agents = agents;
  cfg.actions_per_agent = actions;
  cfg.protocol_density = 0.7;
  cfg.atom_count = 3;
  cfg.label_density = 0.4;
  cfg.pi_percent = pi;
  cfg.seed = rng();
  return random_icgs(cfg);
}

}  // namespace submc::testing
