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


#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "submc/errors.hpp"
#include "submc/experiment.hpp"
#include "submc/oracle.hpp"
#include "submc/pipeline.hpp"
#include "submc/submodel.hpp"
#include "support.hpp"

using namespace submc;
using namespace submc::testing;
using nlohmann::json;

namespace {

// State names carrying entries of node `sub` in variant `v`.
std::vector<std::string> entry_states(const Icgs& m, const SubformulaOutcome& o, std::size_t sub,
                                      Variant v) {
  std::vector<std::string> out;
  for (const auto& e : o.entries)
    if (e.sub == sub && e.variant == v) out.push_back(m.state_name(e.state));
  return out;
}

struct SecondCandidate {
  PreprocessedProblem pre;
  SubformulaTree tree;
  CandidatePair pair;
};

SecondCandidate second_candidate(const std::string& text) {
  Icgs m = rover();
  PreprocessedProblem pre = preprocess(m, parse(text));
  SubformulaTree tree = subformulas(pre.formula, {pre.model.atoms().begin(), pre.model.atoms().end()});
  auto pairs = find_submodels(pre.model, pre.formula);
  CandidatePair pair = pairs.at(1);
  EXPECT_EQ(names(m, pair.core), (std::vector<std::string>{"s_I", "s_2", "s_4", "s_5", "s_6", "s_7",
                                                           "s_8", "e_1", "e_2"}));
  return {pre, tree, pair};
}

const std::vector<std::string> kPsi1{"s_4", "s_5", "s_6", "s_7", "s_8"};
const std::vector<std::string> kPsi2{"s_I", "s_2", "s_4", "s_5", "s_6", "s_7", "s_8"};

}  // namespace

TEST(Procedure, RoverVerdicts) {
  Icgs m = rover();
  std::vector<VerdictValue> want{VerdictValue::False, VerdictValue::True, VerdictValue::False};
  for (std::size_t k = 0; k < 3; ++k) {
    ProcedureReport r = model_checking_procedure(m, parse(rover_formulas()[k]));
    EXPECT_EQ(r.verdict, want[k]) << rover_formulas()[k];
    EXPECT_EQ(r.candidates, 3u);
    EXPECT_EQ(r.conclusive_candidate, std::optional<std::size_t>{0});
  }
}

TEST(Procedure, RoverResidualFormulas) {
  Icgs m = rover();
  ProcedureReport r1 = model_checking_procedure(m, parse(rover_formulas()[0]));
  EXPECT_EQ(r1.per_candidate[0].verification.phi_a, parse("natom_1"));
  EXPECT_EQ(r1.per_candidate[0].verification.phi_e, parse("patom_1"));
  ProcedureReport r3 = model_checking_procedure(m, parse(rover_formulas()[2]));
  const auto& v = r3.per_candidate[0].verification;
  EXPECT_EQ(v.phi_a.to_string(), parse("A F (rp & nip & natom_1)").to_string());
  EXPECT_EQ(v.phi_e.to_string(), parse("E F (rp & nip & patom_1)").to_string());
  EXPECT_FALSE(v.a_holds);
  EXPECT_FALSE(v.e_holds);
}

TEST(Procedure, TrivialFormulas) {
  Icgs m = rover().with_perfect_information();
  EXPECT_EQ(model_checking_procedure(m, parse("<<>> X true")).verdict, VerdictValue::True);
  EXPECT_EQ(model_checking_procedure(m, parse("sp")).verdict, VerdictValue::True);
  EXPECT_EQ(model_checking_procedure(m, parse("!sp")).verdict, VerdictValue::False);
  EXPECT_EQ(model_checking_procedure(rover(), parse("A F (cp | sp)")).verdict, VerdictValue::True);
  EXPECT_THROW(model_checking_procedure(m, parse("<<nobody>> X sp")), NameError);
}

TEST(CheckSubformulas, SecondCandidatePhi2) {
  for (bool filter : {true, false}) {
    SecondCandidate fx = second_candidate(rover_formulas()[1]);
    SubformulaOutcome o = check_subformulas(fx.pair, fx.tree, filter ? &fx.pre.model : nullptr);
    const Icgs& m = fx.pre.model;
    EXPECT_TRUE(o.skipped.empty());
    for (Variant v : {Variant::Negative, Variant::Positive}) {
      EXPECT_EQ(entry_states(m, o, 1, v), kPsi1);
      EXPECT_EQ(entry_states(m, o, 2, v), kPsi2);
    }
    // The sub-models carry the plain atoms; the positive sink has them all.
    EXPECT_TRUE(fx.pair.pos.model.holds(fx.pair.pos.sink, "atom_2"));
    EXPECT_FALSE(fx.pair.neg.model.holds(fx.pair.neg.sink, "atom_2"));
    EXPECT_TRUE(fx.pair.neg.model.holds(*fx.pair.neg.from_base[m.state_index("s_2")], "atom_2"));
  }
}

TEST(CheckSubformulas, SecondCandidatePhi3) {
  SecondCandidate fx = second_candidate(rover_formulas()[2]);
  SubformulaOutcome o = check_subformulas(fx.pair, fx.tree, &fx.pre.model);
  const Icgs& m = fx.pre.model;
  for (Variant v : {Variant::Negative, Variant::Positive}) {
    EXPECT_EQ(entry_states(m, o, 1, v), kPsi1);
    EXPECT_TRUE(entry_states(m, o, 2, v).empty());
  }
}

// Without the existential filter, the all-atom positive sink makes the
// outer operator of phi3 hold at s_I in the positive sub-model.
TEST(CheckSubformulas, SecondCandidatePhi3WithoutFilter) {
  SecondCandidate fx = second_candidate(rover_formulas()[2]);
  SubformulaOutcome o = check_subformulas(fx.pair, fx.tree);
  EXPECT_TRUE(entry_states(fx.pre.model, o, 2, Variant::Negative).empty());
  EXPECT_EQ(entry_states(fx.pre.model, o, 2, Variant::Positive), std::vector<std::string>{"s_I"});
  ProcedureOptions opt;
  opt.existential_filter = false;
  EXPECT_EQ(model_checking_procedure(rover(), parse(rover_formulas()[2]), opt).verdict,
            VerdictValue::Unknown);
}

TEST(CheckSubformulas, NoStrategicOperator) {
  Icgs m = rover();
  PreprocessedProblem pre = preprocess(m, parse("sp & E F oc"));
  auto pairs = find_submodels(pre.model, pre.formula);
  SubformulaTree tree = subformulas(pre.formula);
  SubformulaOutcome o = check_subformulas(pairs[0], tree, &pre.model);
  EXPECT_TRUE(o.entries.empty());
  EXPECT_TRUE(o.skipped.empty());
}

TEST(CheckSubformulas, UnsupportedBodiesAreSkipped) {
  Icgs m = rover();
  ProcedureReport r =
      model_checking_procedure(m, parse("<<rover,mechanic>> F (oc & <<mechanic>> G F rm) | <<mechanic>> X sp"));
  ASSERT_EQ(r.tree.nodes.size(), 3u);
  for (const auto& c : r.per_candidate) {
    EXPECT_EQ(c.outcome.skipped, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(c.outcome.skip_reason.size(), 2u);
    for (const auto& e : c.outcome.entries) EXPECT_EQ(e.sub, 3u);
  }
}

TEST(Report, JsonShape) {
  Icgs m = rover();
  ProcedureReport r = model_checking_procedure(m, parse(rover_formulas()[2]));
  json doc = json::parse(report_json(r, m));
  EXPECT_EQ(doc["verdict"], "false");
  EXPECT_EQ(doc["candidates"], 3);
  EXPECT_EQ(doc["conclusive_candidate"], 0);
  const json& c = doc["per_candidate"][0];
  EXPECT_EQ(c["phiA"], "A F (rp & nip & natom_1)");
  EXPECT_EQ(c["phiE"], "E F (rp & nip & patom_1)");
  EXPECT_EQ(c["A_holds"], false);
  EXPECT_EQ(c["E_holds"], false);
  EXPECT_EQ(c["entries"].size(), 10u);
  EXPECT_TRUE(doc.contains("timings_ms"));
  EXPECT_FALSE(json::parse(report_json(r, m, false)).contains("timings_ms"));
}

TEST(ProcedureProperty, ParallelReportsAreIdentical) {
  std::mt19937_64 rng(71);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    GeneratorConfig cfg;
    cfg.states = 4 + seed % 5;
    cfg.pi_percent = double(10 * (seed % 11));
    cfg.seed = seed;
    Icgs m = random_icgs(cfg);
    Formula f = instantiate(static_cast<Template>(seed % 3), m, rng);
    ProcedureOptions one, eight;
    eight.parallel = 8;
    auto a = model_checking_procedure(m, f, one), b = model_checking_procedure(m, f, eight);
    ASSERT_EQ(report_json(a, m, false), report_json(b, m, false)) << f.to_string();
  }
}

// Verdicts against the oracles, label monotonicity, and agreement between
// all candidates of one instance.
TEST(ProcedureProperty, SoundnessEnvelope) {
  std::mt19937_64 rng(73);
  std::vector<std::string> atoms{"p0", "p1", "p2"};
  std::size_t conclusive = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Icgs m = small_model(seed, 6, double(10 * (seed % 8)));
    Formula body = seed % 2 ? random_cosafety(atoms, rng, 2) : random_atl_body(atoms, rng);
    std::vector<std::string> g{m.agent(seed % 2).name};
    Formula f = Formula::strategic(g, body);
    ProcedureReport r = model_checking_procedure(m, f);
    if (r.verdict == VerdictValue::False && memoryless_strategy_count(m, f) <= 1e5)
      ASSERT_FALSE(oracle_memoryless_uniform(m, f)) << f.to_string() << " seed " << seed;
    if (r.verdict == VerdictValue::True) ASSERT_TRUE(perfect_information_check(m, f)) << f.to_string();
    conclusive += r.verdict != VerdictValue::Unknown;

    PreprocessedProblem pre = preprocess(m, f);
    SubformulaTree tree = subformulas(pre.formula, {pre.model.atoms().begin(), pre.model.atoms().end()});
    std::set<VerdictValue> seen;
    for (auto& pair : find_submodels(pre.model, pre.formula)) {
      SubformulaOutcome o = check_subformulas(pair, tree, &pre.model);
      std::set<std::pair<StateIndex, std::size_t>> neg, pos;
      for (const auto& e : o.entries) (e.variant == Variant::Negative ? neg : pos).insert({e.state, e.sub});
      ASSERT_TRUE(std::includes(pos.begin(), pos.end(), neg.begin(), neg.end()));
      Icgs fresh = pre.model;
      seen.insert(verification(fresh, tree, o, pair.core).value);
    }
    ASSERT_FALSE(seen.count(VerdictValue::True) && seen.count(VerdictValue::False)) << f.to_string();
  }
  EXPECT_GT(conclusive, 100u);
}
