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


#include "submc/experiment.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "submc/errors.hpp"
#include "submc/oracle.hpp"

namespace submc {

const char* to_string(Template t) {
  switch (t) {
    case Template::Single: return "single";
    case Template::Nested: return "nested";
    case Template::Negated: return "negated";
  }
  return "?";
}

Template template_from_string(const std::string& s) {
  if (s == "single") return Template::Single;
  if (s == "nested") return Template::Nested;
  if (s == "negated") return Template::Negated;
  throw std::invalid_argument("unknown template '" + s + "'");
}

namespace {

std::vector<std::string> random_coalition(const Icgs& m, std::mt19937_64& rng) {
  std::vector<std::string> out;
  while (out.empty())
    for (AgentIndex i = 0; i < m.num_agents(); ++i)
      if (std::bernoulli_distribution(0.5)(rng)) out.push_back(m.agent(i).name);
  return out;
}

Formula random_atom(const Icgs& m, std::mt19937_64& rng) {
  if (m.num_atoms() == 0) return Formula::top();
  return Formula::atom(m.atoms()[std::uniform_int_distribution<std::size_t>(0, m.num_atoms() - 1)(rng)]);
}

}  // namespace

Formula instantiate(Template t, const Icgs& m, std::mt19937_64& rng) {
  using F = Formula;
  switch (t) {
    case Template::Single: {
      auto g = random_coalition(m, rng);
      F a = random_atom(m, rng), b = random_atom(m, rng);
      return F::strategic(g, F::finally(F::conj(a, F::finally(b))));
    }
    case Template::Nested: {
      auto g1 = random_coalition(m, rng), g2 = random_coalition(m, rng);
      F a = random_atom(m, rng), b = random_atom(m, rng), c = random_atom(m, rng);
      F inner = F::strategic(g2, F::finally(F::conj(b, F::finally(c))));
      return F::strategic(g1, F::finally(F::conj(a, inner)));
    }
    case Template::Negated: {
      auto g1 = random_coalition(m, rng), g2 = random_coalition(m, rng);
      F a = random_atom(m, rng), b = random_atom(m, rng), c = random_atom(m, rng),
        d = random_atom(m, rng);
      F inner = F::strategic(g2, F::finally(F::conj(c, F::finally(d))));
      return F::strategic(g1, F::finally(F::conj(F::conj(a, F::negation(b)), inner)));
    }
  }
  throw std::logic_error("unreachable");
}

double BucketStats::conclusive_rate() const {
  return models == 0 ? 0.0 : double(verdict_true + verdict_false) / double(models);
}

std::size_t ExperimentReport::total_violations() const {
  std::size_t n = 0;
  for (const auto& b : buckets) n += b.violations + b.internal_errors;
  return n;
}

namespace {

bool single_operator(const Formula& f) {
  if (!f.is_strategic()) return false;
  std::function<bool(const Formula&)> has_quantifier = [&](const Formula& g) {
    if (g.is_quantifier()) return true;
    for (std::size_t i = 0; i < g.arity(); ++i)
      if (has_quantifier(g.child(i))) return true;
    return false;
  };
  return !has_quantifier(f.child(0));
}

}  // namespace

RunRecord run_one(const ExperimentConfig& config, std::size_t bucket, std::size_t index) {
  RunRecord rec;
  rec.bucket = bucket;
  rec.index = index;
  rec.seed = mix_seed(mix_seed(config.seed, bucket), index);
  std::mt19937_64 rng(rec.seed);

  GeneratorConfig gen = config.base;
  gen.states = std::uniform_int_distribution<std::size_t>(config.min_states, config.max_states)(rng);
  gen.pi_percent = config.grid.at(bucket);
  gen.seed = rng();
  Icgs m = random_icgs(gen);
  rec.states = m.num_states();
  Template t = config.templates.at(
      std::uniform_int_distribution<std::size_t>(0, config.templates.size() - 1)(rng));
  Formula f = instantiate(t, m, rng);
  rec.formula = f.to_string();

  ProcedureOptions opts;
  opts.existential_filter = config.existential_filter;
  try {
    ProcedureReport r = model_checking_procedure(m, f, opts);
    rec.verdict = r.verdict;
    rec.candidates = r.candidates;
  } catch (const InternalSoundnessError& e) {
    rec.violation = std::string("internal soundness error: ") + e.what();
    return rec;
  } catch (const std::exception& e) {
    rec.error = e.what();
    return rec;
  }
  if (!config.envelope) return rec;

  try {
    if (rec.verdict == VerdictValue::False && single_operator(f)) {
      if (memoryless_strategy_count(m, f) > double(config.envelope_limit)) {
        rec.skipped = true;
      } else {
        rec.checked = true;
        if (oracle_memoryless_uniform(m, f, config.envelope_limit))
          rec.violation = "false verdict but a uniform memoryless strategy wins";
      }
    }
    if (rec.verdict == VerdictValue::True) {
      rec.checked = true;
      if (!perfect_information_check(m, f))
        rec.violation = "true verdict but perfect-information checking refutes it";
    }
  } catch (const SearchSpaceTooLarge&) {
    rec.skipped = true;
  }
  return rec;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.templates.empty()) throw std::invalid_argument("empty template pool");
  if (config.min_states == 0 || config.min_states > config.max_states)
    throw std::invalid_argument("bad state range");
  auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.config = config;
  const std::size_t per = config.models_per_bucket;
  const std::size_t total = config.grid.size() * per;
  rep.runs.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job; (job = next.fetch_add(1)) < total;)
      rep.runs[job] = run_one(config, job / per, job % per);
  };
  unsigned threads = std::max(1U, config.parallel);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t b = 0; b < config.grid.size(); ++b) {
    BucketStats st;
    st.pi_percent = config.grid[b];
    for (std::size_t i = 0; i < per; ++i) {
      const RunRecord& r = rep.runs[b * per + i];
      ++st.models;
      if (!r.error.empty()) {
        ++st.errors;
        ++st.verdict_unknown;
        continue;
      }
      if (r.violation.starts_with("internal")) {
        ++st.internal_errors;
        ++st.verdict_unknown;
        continue;
      }
      switch (r.verdict) {
        case VerdictValue::True: ++st.verdict_true; break;
        case VerdictValue::False: ++st.verdict_false; break;
        case VerdictValue::Unknown: ++st.verdict_unknown; break;
      }
      st.candidates += r.candidates;
      st.checked += r.checked;
      st.skipped += r.skipped;
      st.violations += !r.violation.empty();
    }
    rep.buckets.push_back(st);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

const char* kNote =
    "conclusive rates come from this generator's distribution; the reference "
    "rate of 0.80 was measured on a different generator, so deviation_from_reference "
    "is informative only";

}  // namespace

std::string experiment_json(const ExperimentReport& r, bool with_timing) {
  using nlohmann::json;
  const auto& c = r.config;
  json cfg = {{"seed", c.seed},
              {"models_per_bucket", c.models_per_bucket},
              {"grid", c.grid},
              {"min_states", c.min_states},
              {"max_states", c.max_states},
              {"agents", c.base.agents},
              {"actions_per_agent", c.base.actions_per_agent},
              {"protocol_density", c.base.protocol_density},
              {"atom_count", c.base.atom_count},
              {"label_density", c.base.label_density},
              {"topology", to_string(c.base.topology)},
              {"layered_fraction", c.base.layered_fraction},
              {"envelope", c.envelope},
              {"envelope_limit", c.envelope_limit},
              {"existential_filter", c.existential_filter}};
  json templates = json::array();
  for (Template t : c.templates) templates.push_back(to_string(t));
  cfg["templates"] = templates;

  json buckets = json::array();
  for (const auto& b : r.buckets)
    buckets.push_back({{"pi_percent", b.pi_percent},
                       {"models", b.models},
                       {"true", b.verdict_true},
                       {"false", b.verdict_false},
                       {"unknown", b.verdict_unknown},
                       {"conclusive_rate", b.conclusive_rate()},
                       {"deviation_from_reference", b.conclusive_rate() - r.reference_rate},
                       {"candidates", b.candidates},
                       {"oracle_checked", b.checked},
                       {"oracle_skipped", b.skipped},
                       {"violations", b.violations},
                       {"internal_errors", b.internal_errors},
                       {"errors", b.errors}});
  json violations = json::array();
  for (const auto& run : r.runs)
    if (!run.violation.empty() || !run.error.empty())
      violations.push_back({{"bucket", run.bucket},
                            {"index", run.index},
                            {"seed", run.seed},
                            {"formula", run.formula},
                            {"violation", run.violation},
                            {"error", run.error}});
  json doc = {{"config", cfg},
              {"buckets", buckets},
              {"reference_rate", r.reference_rate},
              {"note", kNote},
              {"problems", violations}};
  if (with_timing) doc["wall_ms"] = r.wall_ms;
  return doc.dump(2) + "\n";
}

std::string experiment_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "pi_percent,models,true,false,unknown,conclusive_rate,deviation_from_reference,"
         "candidates,oracle_checked,oracle_skipped,violations,internal_errors,errors\n";
  out << std::setprecision(6);
  for (const auto& b : r.buckets)
    out << b.pi_percent << ',' << b.models << ',' << b.verdict_true << ',' << b.verdict_false
        << ',' << b.verdict_unknown << ',' << b.conclusive_rate() << ','
        << b.conclusive_rate() - r.reference_rate << ',' << b.candidates << ',' << b.checked
        << ',' << b.skipped << ',' << b.violations << ',' << b.internal_errors << ','
        << b.errors << '\n';
  return out.str();
}

std::string experiment_text(const ExperimentReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "pi%    models  true  false  unknown  conclusive  violations\n";
  for (const auto& b : r.buckets)
    out << std::setw(5) << std::setprecision(1) << b.pi_percent << std::setprecision(3)
        << std::setw(9) << b.models << std::setw(6) << b.verdict_true << std::setw(7)
        << b.verdict_false << std::setw(9) << b.verdict_unknown << std::setw(12)
        << b.conclusive_rate() << std::setw(12) << b.violations + b.internal_errors << '\n';
  out << "note: " << kNote << '\n';
  return out.str();
}

}  // namespace submc
