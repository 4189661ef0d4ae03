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


// Command-line front end. `check` exits with 0 for true, 1 for false and
// 2 for unknown (the highest code over several formulas); `experiment`
// exits with 4 when an oracle cross-check fails. Errors exit with 3.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "submc/ctlstar.hpp"
#include "submc/errors.hpp"
#include "submc/experiment.hpp"
#include "submc/game.hpp"
#include "submc/generator.hpp"
#include "submc/model_io.hpp"
#include "submc/oracle.hpp"
#include "submc/pipeline.hpp"
#include "submc/submodel.hpp"
#include "submc/transform.hpp"

namespace {

using namespace submc;
using nlohmann::json;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write '" + out + "'");
  f << text;
}

std::vector<std::string> read_formulas(const std::string& formula, const std::string& file) {
  std::vector<std::string> out;
  if (!formula.empty()) out.push_back(formula);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error("cannot read '" + file + "'");
    for (std::string line; std::getline(in, line);) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      out.push_back(line.substr(b));
    }
  }
  if (out.empty()) throw Error("no formula given (use --formula or --formulas-file)");
  return out;
}

json state_names(const Icgs& m, const StateSet& set) {
  json a = json::array();
  for (StateIndex s : set.elements()) a.push_back(m.state_name(s));
  return a;
}

int exit_code(VerdictValue v) {
  switch (v) {
    case VerdictValue::True: return 0;
    case VerdictValue::False: return 1;
    case VerdictValue::Unknown: return 2;
  }
  return 2;
}

struct Common {
  std::string model;
  std::string formula;
  std::string formulas_file;
  std::string out;
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned parallel = 1;
  bool perfect_information = false;
};

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

Icgs load(const Common& c) {
  Icgs m = load_model_file(c.model);
  return c.perfect_information ? m.with_perfect_information() : m;
}

int run_check(const Common& c, const std::string& report_path, bool no_filter) {
  Icgs m = load(c);
  ProcedureOptions opts;
  opts.parallel = c.parallel;
  opts.existential_filter = !no_filter;
  int code = 0;
  json reports = json::array();
  std::ostringstream text;
  for (const auto& src : read_formulas(c.formula, c.formulas_file)) {
    ProcedureReport r = model_checking_procedure(m, parse(src), opts);
    code = std::max(code, exit_code(r.verdict));
    reports.push_back(json::parse(report_json(r, m)));
    text << to_string(r.verdict) << "  " << r.formula.to_string() << "  (candidates "
         << r.candidates << ", conclusive "
         << (r.conclusive_candidate ? std::to_string(*r.conclusive_candidate) : "-") << ")\n";
  }
  json doc = reports.size() == 1 ? reports[0] : reports;
  if (!report_path.empty()) emit(doc.dump(2) + "\n", report_path);
  emit(c.format == "json" ? doc.dump(2) + "\n" : text.str(), c.out);
  return code;
}

int run_enumerate(const Common& c, const std::string& emit_dir) {
  Icgs m = load(c);
  Formula f = parse(read_formulas(c.formula, c.formulas_file).at(0));
  PreprocessedProblem pre = preprocess(m, f);
  EnumerationStats stats;
  auto pairs = find_submodels(pre.model, pre.formula, &stats);
  json cores = json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    cores.push_back(state_names(m, pairs[k].core));
    auto removed = pairs[k].core.complement();
    text << k << ": S minus {";
    bool first = true;
    for (StateIndex s : removed.elements()) {
      text << (first ? "" : ", ") << m.state_name(s);
      first = false;
    }
    text << "}\n";
    if (!emit_dir.empty()) {
      std::filesystem::create_directories(emit_dir);
      auto base = std::filesystem::path(emit_dir);
      std::ofstream(base / ("neg_" + std::to_string(k) + ".json")) << serialize_model(pairs[k].neg.model);
      std::ofstream(base / ("pos_" + std::to_string(k) + ".json")) << serialize_model(pairs[k].pos.model);
    }
  }
  json doc = {{"candidates", pairs.size()},
              {"cores", cores},
              {"explored", stats.explored},
              {"discarded_initial", stats.discarded_initial},
              {"duplicates", stats.duplicates}};
  emit(c.format == "json" ? doc.dump(2) + "\n" : text.str(), c.out);
  return 0;
}

int run_check_sub(const Common& c) {
  Icgs m = load(c);
  Formula f = parse(read_formulas(c.formula, c.formulas_file).at(0));
  StateSet sat = check_strategic(m, f);
  json doc = {{"formula", f.to_string()},
              {"states", state_names(m, sat)},
              {"initial", sat.contains(m.initial())}};
  emit(c.format == "json" ? doc.dump(2) + "\n" : doc["states"].dump() + "\n", c.out);
  return 0;
}

int run_check_ctl(const Common& c) {
  Icgs m = load(c);
  json all = json::array();
  std::ostringstream text;
  for (const auto& src : read_formulas(c.formula, c.formulas_file)) {
    Formula f = parse(src);
    StateSet sat = sat_ctlstar(m, f);
    all.push_back({{"formula", f.to_string()},
                   {"states", state_names(m, sat)},
                   {"initial", sat.contains(m.initial())}});
    text << (sat.contains(m.initial()) ? "true " : "false") << "  " << f.to_string() << "  "
         << all.back()["states"].dump() << "\n";
  }
  json doc = all.size() == 1 ? all[0] : all;
  emit(c.format == "json" ? doc.dump(2) + "\n" : text.str(), c.out);
  return 0;
}

int run_oracle(const Common& c, std::size_t limit) {
  Icgs m = load(c);
  Formula f = parse(read_formulas(c.formula, c.formulas_file).at(0));
  json doc = {{"formula", f.to_string()}};
  try {
    doc["memoryless_uniform"] = oracle_memoryless_uniform(m, f, limit);
  } catch (const SearchSpaceTooLarge& e) {
    doc["memoryless_uniform"] = nullptr;
    doc["memoryless_uniform_error"] = e.what();
  }
  try {
    doc["perfect_information"] = perfect_information_check(m, f);
  } catch (const UnsupportedFormula& e) {
    doc["perfect_information"] = nullptr;
    doc["perfect_information_error"] = e.what();
  }
  if (c.format == "json") {
    emit(doc.dump(2) + "\n", c.out);
  } else {
    std::ostringstream t;
    t << "memoryless uniform: " << doc["memoryless_uniform"].dump() << "\n"
      << "perfect information: " << doc["perfect_information"].dump() << "\n";
    emit(t.str(), c.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ATL* checking under imperfect information via perfect-information sub-models"};
  app.require_subcommand(1);
  Common c;

  auto model_opts = [&](CLI::App* sub) {
    sub->add_option("--model", c.model, "Model JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--formula", c.formula, "Formula text");
    sub->add_option("--formulas-file", c.formulas_file, "One formula per line")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", c.out, "Write output here instead of stdout");
    sub->add_flag("--perfect-information", c.perfect_information,
                  "Treat every agent as having perfect information");
    add_format(sub, c);
  };

  std::string report_path;
  bool no_filter = false;
  auto* check = app.add_subcommand("check", "Run the verification procedure");
  model_opts(check);
  check->add_option("--parallel", c.parallel, "Worker threads over candidates")->check(CLI::PositiveNumber);
  check->add_option("--report", report_path, "Write the JSON report here");
  check->add_option("--seed", c.seed, "Accepted for uniformity; the procedure is deterministic");
  check->add_flag("--no-existential-filter", no_filter,
                  "Keep positive sub-model results without the full-model existential check");

  std::string emit_dir;
  auto* enumerate = app.add_subcommand("enumerate", "List the candidate sub-model cores");
  model_opts(enumerate);
  enumerate->add_option("--emit-dir", emit_dir, "Write neg_k.json / pos_k.json here");

  auto* check_sub = app.add_subcommand("check-sub", "Satisfaction set of one strategic operator");
  model_opts(check_sub);

  auto* check_ctl = app.add_subcommand("check-ctl", "CTL* satisfaction sets");
  model_opts(check_ctl);

  std::size_t limit = 1'000'000;
  auto* oracle = app.add_subcommand("oracle", "Brute-force strategy search and perfect-information check");
  model_opts(oracle);
  oracle->add_option("--limit", limit, "Maximum number of memoryless strategies");

  GeneratorConfig gen;
  std::string topology = "mixed", preset;
  auto* generate = app.add_subcommand("generate", "Write a random model");
  generate->add_option("--states", gen.states)->check(CLI::PositiveNumber);
  generate->add_option("--agents", gen.agents)->check(CLI::PositiveNumber);
  generate->add_option("--actions", gen.actions_per_agent)->check(CLI::PositiveNumber);
  generate->add_option("--atoms", gen.atom_count);
  generate->add_option("--protocol-density", gen.protocol_density)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--label-density", gen.label_density)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--pi", gen.pi_percent, "Percentage of imperfect information")
      ->check(CLI::Range(0.0, 100.0));
  generate->add_option("--topology", topology)->check(CLI::IsMember({"uniform", "layered", "mixed"}));
  generate->add_option("--layered-fraction", gen.layered_fraction)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--preset", preset)->check(CLI::IsMember({"rover-large"}));
  generate->add_option("--seed", c.seed);
  generate->add_option("--out", c.out);

  ExperimentConfig exp;
  std::vector<double> grid;
  std::vector<std::string> templates;
  bool no_envelope = false;
  auto* experiment = app.add_subcommand("experiment", "Conclusiveness experiment");
  experiment->add_option("--grid", grid, "pi_percent values")->delimiter(',');
  experiment->add_option("--models", exp.models_per_bucket, "Models per bucket");
  experiment->add_option("--min-states", exp.min_states)->check(CLI::PositiveNumber);
  experiment->add_option("--max-states", exp.max_states)->check(CLI::PositiveNumber);
  experiment->add_option("--agents", exp.base.agents)->check(CLI::PositiveNumber);
  experiment->add_option("--actions", exp.base.actions_per_agent)->check(CLI::PositiveNumber);
  experiment->add_option("--atoms", exp.base.atom_count);
  experiment->add_option("--templates", templates, "single, nested, negated")->delimiter(',');
  experiment->add_option("--envelope-limit", exp.envelope_limit);
  experiment->add_flag("--no-envelope", no_envelope, "Skip oracle cross-checks");
  experiment->add_flag("--no-existential-filter", no_filter);
  experiment->add_option("--seed", c.seed);
  experiment->add_option("--parallel", c.parallel)->check(CLI::PositiveNumber);
  experiment->add_option("--out", c.out);
  add_format(experiment, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the error exit code; --help and --version exit 0.
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*check) return run_check(c, report_path, no_filter);
    if (*enumerate) return run_enumerate(c, emit_dir);
    if (*check_sub) return run_check_sub(c);
    if (*check_ctl) return run_check_ctl(c);
    if (*oracle) return run_oracle(c, limit);
    if (*generate) {
      if (!preset.empty()) {
        gen = rover_large_preset(c.seed);
      } else {
        gen.topology = topology_from_string(topology);
        gen.seed = c.seed;
      }
      emit(serialize_model(random_icgs(gen)), c.out);
      return 0;
    }
    if (*experiment) {
      if (!grid.empty()) exp.grid = grid;
      if (!templates.empty()) {
        exp.templates.clear();
        for (const auto& t : templates) exp.templates.push_back(template_from_string(t));
      }
      exp.envelope = !no_envelope;
      exp.existential_filter = !no_filter;
      exp.seed = c.seed;
      exp.parallel = c.parallel;
      ExperimentReport r = run_experiment(exp);
      if (c.format == "json")
        emit(experiment_json(r), c.out);
      else if (c.format == "csv")
        emit(experiment_csv(r), c.out);
      else
        emit(experiment_text(r), c.out);
      return r.total_violations() == 0 ? 0 : 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
