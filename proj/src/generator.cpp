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


#include "submc/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "submc/errors.hpp"

namespace submc {

const char* to_string(Topology t) {
  switch (t) {
    case Topology::Uniform: return "uniform";
    case Topology::Layered: return "layered";
    case Topology::Mixed: return "mixed";
  }
  return "?";
}

Topology topology_from_string(const std::string& s) {
  if (s == "uniform") return Topology::Uniform;
  if (s == "layered") return Topology::Layered;
  if (s == "mixed") return Topology::Mixed;
  throw std::invalid_argument("unknown topology '" + s + "'");
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a combined word.
  std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

Icgs random_icgs(const GeneratorConfig& cfg) {
  if (cfg.states == 0 || cfg.agents == 0 || cfg.actions_per_agent == 0)
    throw PreconditionError("generator counts must be at least 1");
  if (cfg.pi_percent < 0 || cfg.pi_percent > 100)
    throw PreconditionError("pi_percent must lie in [0, 100]");

  std::mt19937_64 rng(cfg.seed);
  const std::size_t n = cfg.states;
  bool layered = cfg.topology == Topology::Layered ||
                 (cfg.topology == Topology::Mixed && coin(rng, cfg.layered_fraction));

  IcgsBuilder b;
  for (std::size_t i = 0; i < cfg.agents; ++i) {
    std::vector<std::string> acts;
    for (std::size_t a = 0; a < cfg.actions_per_agent; ++a) acts.push_back("x" + std::to_string(a));
    b.add_agent("a" + std::to_string(i), std::move(acts));
  }
  for (std::size_t s = 0; s < n; ++s) b.add_state("s" + std::to_string(s));
  b.set_initial(0);
  for (std::size_t p = 0; p < cfg.atom_count; ++p) b.add_atom("p" + std::to_string(p));

  // Indistinguishability: a fixed share of all pairs, merged per agent.
  std::vector<std::pair<StateIndex, StateIndex>> pairs;
  for (StateIndex s = 0; s < n; ++s)
    for (StateIndex t = s + 1; t < n; ++t) pairs.push_back({s, t});
  auto take = static_cast<std::size_t>(
      std::llround(cfg.pi_percent / 100.0 * static_cast<double>(pairs.size())));
  std::vector<std::vector<StateIndex>> cls(cfg.agents, std::vector<StateIndex>(n));
  for (std::size_t i = 0; i < cfg.agents; ++i) {
    std::vector<std::pair<StateIndex, StateIndex>> order = pairs;
    std::shuffle(order.begin(), order.end(), rng);
    UnionFind uf(n);
    for (std::size_t k = 0; k < take; ++k) uf.unite(order[k].first, order[k].second);
    for (StateIndex s = 0; s < n; ++s) {
      cls[i][s] = uf.find(s);
      if (cls[i][s] != s) b.add_indistinguishable(i, cls[i][s], s);
    }
  }

  // Protocols, one draw per class.
  std::vector<std::vector<std::vector<ActionIndex>>> prot(
      cfg.agents, std::vector<std::vector<ActionIndex>>(n));
  for (std::size_t i = 0; i < cfg.agents; ++i)
    for (StateIndex s = 0; s < n; ++s) {
      if (cls[i][s] != s) {
        prot[i][s] = prot[i][cls[i][s]];
        continue;
      }
      std::vector<ActionIndex> acts;
      ActionIndex forced = pick(rng, cfg.actions_per_agent);
      for (ActionIndex a = 0; a < cfg.actions_per_agent; ++a)
        if (a == forced || coin(rng, cfg.protocol_density)) acts.push_back(a);
      prot[i][s] = acts;
    }
  for (std::size_t i = 0; i < cfg.agents; ++i)
    for (StateIndex s = 0; s < n; ++s) b.set_protocol(i, s, prot[i][s]);

  // Layers of roughly sqrt(n) states; s0 alone in the first layer.
  std::vector<std::size_t> layer(n, 0);
  std::size_t layers = 1;
  if (layered && n > 1) {
    std::size_t width = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(double(n))));
    for (StateIndex s = 1; s < n; ++s) layer[s] = 1 + (s - 1) / width;
    layers = layer[n - 1] + 1;
  }
  auto successor = [&](StateIndex s) -> StateIndex {
    if (!layered || n == 1) return pick(rng, n);
    std::size_t target = layer[s];
    if (layer[s] + 1 < layers && !coin(rng, 0.2)) target = layer[s] + 1;
    if (layer[s] + 1 == layers && coin(rng, 0.1)) target = 0;  // mission restart
    std::vector<StateIndex> candidates;
    for (StateIndex t = 0; t < n; ++t)
      if (layer[t] == target) candidates.push_back(t);
    return candidates[pick(rng, candidates.size())];
  };

  for (StateIndex s = 0; s < n; ++s) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < cfg.agents; ++i) total *= prot[i][s].size();
    for (std::size_t k = 0; k < total; ++k) {
      // Mixed radix over the protocol sets, agent 0 most significant.
      JointAction a;
      a.choice.resize(cfg.agents);
      std::size_t r = k;
      for (std::size_t i = cfg.agents; i-- > 0;) {
        a.choice[i] = prot[i][s][r % prot[i][s].size()];
        r /= prot[i][s].size();
      }
      b.add_transition(s, std::move(a), successor(s));
    }
  }

  for (StateIndex s = 0; s < n; ++s)
    for (AtomIndex p = 0; p < cfg.atom_count; ++p)
      if (coin(rng, cfg.label_density)) b.add_label(s, p);

  return b.build();
}

GeneratorConfig rover_large_preset(std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.states = 300;
  cfg.agents = 12;
  cfg.actions_per_agent = 3;
  cfg.protocol_density = 0.15;
  cfg.atom_count = 8;
  cfg.label_density = 0.2;
  cfg.pi_percent = 0.005;
  cfg.topology = Topology::Layered;
  cfg.seed = seed;
  return cfg;
}

}  // namespace submc
