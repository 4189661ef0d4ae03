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


/// \file experiment.hpp
/// \brief Conclusiveness experiment over random models, with oracle
/// cross-checks of every verdict that an oracle can decide.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "submc/formula.hpp"
#include "submc/generator.hpp"
#include "submc/icgs.hpp"
#include "submc/pipeline.hpp"

namespace submc {

/// Formula shapes, instantiated with random atoms and coalitions:
///   single   <<G>> F (a & F b)
///   nested   <<G1>> F (a & <<G2>> F (b & F c))
///   negated  <<G1>> F (a & !b & <<G2>> F (c & F d))
enum class Template { Single, Nested, Negated };

const char* to_string(Template t);
Template template_from_string(const std::string& s);
Formula instantiate(Template t, const Icgs& m, std::mt19937_64& rng);

struct ExperimentConfig {
  GeneratorConfig base;  // pi_percent, states and seed are set per model
  std::size_t min_states = 4;
  std::size_t max_states = 8;
  std::vector<double> grid{0, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  std::size_t models_per_bucket = 500;
  std::uint64_t seed = 1;
  std::vector<Template> templates{Template::Single, Template::Nested, Template::Negated};
  unsigned parallel = 1;
  /// Cross-check verdicts against the oracles.
  bool envelope = true;
  /// Memoryless strategy count above which the witness search is skipped.
  std::size_t envelope_limit = 4096;
  bool existential_filter = true;
};

struct RunRecord {
  std::size_t bucket = 0;
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t states = 0;
  std::string formula;
  VerdictValue verdict = VerdictValue::Unknown;
  std::size_t candidates = 0;
  bool checked = false;  // an oracle cross-check ran
  bool skipped = false;  // a cross-check was applicable but too large
  std::string violation;  // empty when consistent
  std::string error;      // exception text, if the procedure failed
};

struct BucketStats {
  double pi_percent = 0;
  std::size_t models = 0;
  std::size_t verdict_true = 0;
  std::size_t verdict_false = 0;
  std::size_t verdict_unknown = 0;
  std::size_t candidates = 0;  // summed over models
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::size_t internal_errors = 0;
  std::size_t errors = 0;
  double conclusive_rate() const;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<BucketStats> buckets;
  std::vector<RunRecord> runs;
  double reference_rate = 0.8;
  double wall_ms = 0;
  std::size_t total_violations() const;
};

/// Every model and formula is derived from (config.seed, bucket, index),
/// so the report apart from wall time is independent of config.parallel.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Runs one model of the experiment; exposed for tests.
RunRecord run_one(const ExperimentConfig& config, std::size_t bucket, std::size_t index);

std::string experiment_json(const ExperimentReport& r, bool with_timing = true);
std::string experiment_csv(const ExperimentReport& r);
std::string experiment_text(const ExperimentReport& r);

}  // namespace submc
