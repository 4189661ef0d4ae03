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

#include <random>

#include "submc/automata.hpp"
#include "submc/ctlstar.hpp"
#include "submc/errors.hpp"
#include "submc/game.hpp"
#include "submc/oracle.hpp"
#include "submc/submodel.hpp"
#include "submc/transform.hpp"
#include "support.hpp"

using namespace submc;
using namespace submc::testing;

namespace {

Formula path(const char* text) { return parse(text, Scope::Path); }

// Names of the base states in a sub-model state set.
std::vector<std::string> base_names(const Icgs& base, const SubModel& sm, const StateSet& set) {
  std::vector<std::string> out;
  for (StateIndex s : set.elements())
    out.push_back(s == sm.sink ? sm.model.state_name(s) : base.state_name(sm.to_base[s]));
  return out;
}

const std::vector<std::string> kCore{"s_4", "s_5", "s_6", "s_7", "s_8"};

// Every word prefix.cycle^omega with |prefix| + |cycle| <= n over `atoms`.
template <class F>
void for_each_lasso(std::size_t atoms, std::size_t n, F&& f) {
  std::size_t letters = std::size_t(1) << atoms;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < len; ++k) total *= letters;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Letter> word;
      for (std::size_t k = 0, c = code; k < len; ++k, c /= letters) word.push_back(c % letters);
      for (std::size_t split = 0; split < len; ++split)
        f(std::vector<Letter>(word.begin(), word.begin() + split),
          std::vector<Letter>(word.begin() + split, word.end()));
    }
  }
}

std::vector<LabelSet> to_labels(const std::vector<Letter>& w, const std::vector<std::string>& atoms) {
  std::vector<LabelSet> out;
  for (Letter a : w) {
    LabelSet l;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (a >> k & 1) l.insert(atoms[k]);
    out.push_back(l);
  }
  return out;
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify_path_formula(path("F ((pl | pr) & F (oc & rm))")), PathClass::CoSafety);
  EXPECT_EQ(classify_path_formula(path("X p")), PathClass::AtlFragment);
  EXPECT_EQ(classify_path_formula(path("p U q")), PathClass::AtlFragment);
  EXPECT_EQ(classify_path_formula(path("p R (q | !r)")), PathClass::AtlFragment);
  EXPECT_EQ(classify_path_formula(path("G F p")), PathClass::Unsupported);
  EXPECT_EQ(classify_path_formula(path("G (p R X q)")), PathClass::Safety);
  EXPECT_EQ(classify_path_formula(path("X X p")), PathClass::CoSafety);
  EXPECT_EQ(classify_path_formula(path("E X p")), PathClass::Unsupported);
  EXPECT_STREQ(to_string(PathClass::Safety), "safety");
}

TEST(ControllablePre, RoverExamples) {
  Icgs m = rover().with_perfect_information();
  std::vector<AgentIndex> r{m.agent_index("rover")};
  EXPECT_TRUE(controllable_pre(m, r, states(m, {"s_6"})).contains(m.state_index("s_4")));
  EXPECT_EQ(controllable_pre(m, r, StateSet::full(m.num_states())), StateSet::full(m.num_states()));
  EXPECT_FALSE(controllable_pre(m, r, states(m, {"s_4"})).contains(m.initial()));
  // From s_I, s_1 needs both agents; the mechanic alone cannot force it.
  std::vector<AgentIndex> both{0, 1};
  EXPECT_TRUE(controllable_pre(m, both, states(m, {"s_1"})).contains(m.initial()));
  EXPECT_FALSE(controllable_pre(m, {1}, states(m, {"s_1"})).contains(m.initial()));
  StateSet checks = states(m, {"s_1", "s_2", "s_3"});
  EXPECT_FALSE(controllable_pre(m, {1}, checks).contains(m.initial()));
  EXPECT_TRUE(adversarial_pre(m, {1}, checks).contains(m.initial()));
  EXPECT_FALSE(adversarial_pre(m, {1}, states(m, {"s_1"})).contains(m.initial()));
}

TEST(ControllablePre, MonotoneInTarget) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Icgs m = small_model(seed, 6);
    StateSet a(m.num_states()), b(m.num_states());
    for (StateIndex s = 0; s < m.num_states(); ++s) {
      if (std::bernoulli_distribution(0.4)(rng)) a.insert(s);
      if (a.contains(s) || std::bernoulli_distribution(0.3)(rng)) b.insert(s);
    }
    for (std::vector<AgentIndex> g : {std::vector<AgentIndex>{}, {0}, {1}, {0, 1}}) {
      ASSERT_TRUE(controllable_pre(m, g, a).subset_of(controllable_pre(m, g, b)));
      ASSERT_TRUE(adversarial_pre(m, g, a).subset_of(adversarial_pre(m, g, b)));
    }
  }
}

TEST(CheckStrategic, RoverAtlFragment) {
  Icgs m = rover().with_perfect_information();
  EXPECT_EQ(names(m, check_strategic(m, parse("<<rover>> true U (oc & rm)"))), kCore);
  EXPECT_EQ(check_strategic(m, parse("<<>> X true")), StateSet::full(m.num_states()));
  EXPECT_EQ(check_strategic(m, parse("<<rover>> F false")), StateSet(m.num_states()));
  EXPECT_EQ(check_strategic(m, parse("[[rover]] F false")), StateSet(m.num_states()));
}

TEST(CheckStrategic, TwoStateGrandCoalition) {
  auto doc = std::string(R"({"agents":[{"name":"a","actions":["x","y"]},{"name":"b","actions":["x","y"]}],
    "states":[{"name":"u","labels":[]},{"name":"v","labels":["p"]}],"initial":"u",
    "protocol":[{"agent":"a","state":"u","actions":["x","y"]},{"agent":"b","state":"u","actions":["x","y"]},
                {"agent":"a","state":"v","actions":["x"]},{"agent":"b","state":"v","actions":["x"]}],
    "transitions":[{"from":"u","action":["x","x"],"to":"u"},{"from":"u","action":["x","y"],"to":"u"},
                   {"from":"u","action":["y","x"],"to":"u"},{"from":"u","action":["y","y"],"to":"v"},
                   {"from":"v","action":["x","x"],"to":"u"}]})");
  Icgs m = load_model(doc);
  EXPECT_EQ(names(m, check_strategic(m, parse("<<a,b>> X p"))), std::vector<std::string>{"u"});
  EXPECT_TRUE(check_strategic(m, parse("<<a>> X p")).empty());
  EXPECT_TRUE(check_strategic(m, parse("[[a]] X p")).empty());
  EXPECT_EQ(names(m, check_strategic(m, parse("[[a]] F p"))), std::vector<std::string>{"v"});
  EXPECT_EQ(names(m, check_strategic(m, parse("<<a>> G !p"))), std::vector<std::string>{"u"});
}

TEST(CheckStrategic, SecondCandidateSubModels) {
  Icgs base = rover();
  StateSet core = StateSet::full(base.num_states()) - states(base, {"s_1", "s_3"});
  for (SubModel sm : {generate_negative(base, core), generate_positive(base, core)}) {
    Formula psi1 = parse("<<rover>> F ((pl | pr) & F (oc & rm))");
    StateSet r1 = check_strategic(sm.model, psi1);
    StateSet on_core = r1;
    on_core.erase(sm.sink);
    EXPECT_EQ(base_names(base, sm, on_core), kCore);
    AtomIndex a = sm.add_atom("atom_1");
    for (StateIndex s : on_core.elements()) sm.model.set_label(s, a);
    StateSet r2 = check_strategic(sm.model, parse("<<rover,mechanic>> F ((oc & rm) & atom_1)"));
    r2.erase(sm.sink);
    EXPECT_EQ(base_names(base, sm, r2),
              (std::vector<std::string>{"s_I", "s_2", "s_4", "s_5", "s_6", "s_7", "s_8"}));
  }
}

TEST(CheckStrategic, Errors) {
  Icgs m = rover();
  EXPECT_THROW(check_strategic(m, parse("<<rover>> F oc")), PreconditionError);
  EXPECT_NO_THROW(check_strategic(m, parse("<<mechanic>> F oc")));
  Icgs pi = m.with_perfect_information();
  EXPECT_THROW(check_strategic(pi, parse("<<rover>> G F oc")), UnsupportedFormula);
  EXPECT_THROW(check_strategic(pi, parse("<<rover>> F (oc & G rm)")), UnsupportedFormula);
}

TEST(Dfa, SizesAndShapes) {
  EXPECT_EQ(ltl_to_dfa(path("F p"), {"p"}, Acceptance::Reach).num_states(), 2u);
  EXPECT_EQ(ltl_to_dfa(path("F (p & F q)"), {"p", "q"}, Acceptance::Reach).num_states(), 3u);
  auto g = ltl_to_dfa(path("G p"), {"p"}, Acceptance::Safe);
  EXPECT_EQ(g.num_states(), 2u);
  EXPECT_TRUE(g.accepting(g.step(g.initial(), 1)));
  auto trap = g.step(g.initial(), 0);
  EXPECT_TRUE(g.is_false(trap));
  EXPECT_EQ(g.step(trap, 1), trap);
  EXPECT_THROW(ltl_to_dfa(path("G p"), {"p"}, Acceptance::Reach), UnsupportedFormula);
  EXPECT_THROW(ltl_to_dfa(path("F p"), {"p"}, Acceptance::Safe), UnsupportedFormula);
}

// Automaton languages against the word evaluator on all short lassos.
TEST(Dfa, LanguageMatchesEvaluator) {
  std::vector<std::string> atoms{"p", "q"};
  std::mt19937_64 rng(23);
  std::vector<std::pair<Formula, Acceptance>> cases{
      {path("F p"), Acceptance::Reach},       {path("F (p & F q)"), Acceptance::Reach},
      {path("p U (q & X p)"), Acceptance::Reach}, {path("G p"), Acceptance::Safe},
      {path("p R (q | X !p)"), Acceptance::Safe}};
  for (int k = 0; k < 40; ++k) {
    cases.push_back({random_cosafety(atoms, rng, 3), Acceptance::Reach});
    cases.push_back({random_safety(atoms, rng, 3), Acceptance::Safe});
  }
  for (auto& [psi, kind] : cases) {
    auto dfa = ltl_to_dfa(psi, atoms, kind);
    for_each_lasso(2, 4, [&](const std::vector<Letter>& u, const std::vector<Letter>& v) {
      ASSERT_EQ(dfa.accepts_lasso(u, v), eval_word(to_labels(u, atoms), to_labels(v, atoms), psi))
          << psi.to_string();
    });
  }
}

TEST(CheckStrategicProperty, EmptyAndGrandCoalitionMatchPathQuantifiers) {
  std::mt19937_64 rng(29);
  std::vector<std::string> atoms{"p0", "p1", "p2"};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Icgs m = small_model(seed);
    Formula psi = seed % 3 == 0   ? random_atl_body(atoms, rng)
                  : seed % 3 == 1 ? random_cosafety(atoms, rng, 3)
                                  : random_safety(atoms, rng, 3);
    std::vector<std::string> ag{m.agent(0).name, m.agent(1).name};
    StateSet a = sat_ctlstar(m, Formula::forall(psi)), e = sat_ctlstar(m, Formula::exists(psi));
    ASSERT_EQ(check_strategic(m, Formula::strategic({}, psi)), a) << psi.to_string();
    ASSERT_EQ(check_strategic(m, Formula::strategic(ag, psi)), e) << psi.to_string();
    ASSERT_EQ(check_strategic(m, Formula::strategic_dual({}, psi)), e) << psi.to_string();
    ASSERT_EQ(check_strategic(m, Formula::strategic_dual(ag, psi)), a) << psi.to_string();
  }
}

TEST(CheckStrategicProperty, CoalitionMonotone) {
  std::mt19937_64 rng(31);
  std::vector<std::string> atoms{"p0", "p1", "p2"};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Icgs m = small_model(seed, 6, 0, 3, 2);
    Formula psi = seed % 2 ? random_cosafety(atoms, rng, 3) : random_atl_body(atoms, rng);
    std::vector<std::string> small{m.agent(0).name}, large{m.agent(0).name, m.agent(2).name};
    ASSERT_TRUE(check_strategic(m, Formula::strategic(small, psi))
                    .subset_of(check_strategic(m, Formula::strategic(large, psi))));
    ASSERT_TRUE(check_strategic(m, Formula::strategic_dual(large, psi))
                    .subset_of(check_strategic(m, Formula::strategic_dual(small, psi))));
  }
}

// ATL-fragment bodies: memoryless strategies suffice, so the exact
// memoryless enumeration is the reference.
TEST(CheckStrategicOracle, AtlFragmentMatchesMemoryless) {
  std::mt19937_64 rng(37);
  std::vector<std::string> atoms{"p0", "p1", "p2"};
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Icgs m = small_model(seed);
    Formula f = random_strategic(m, random_atl_body(atoms, rng), rng);
    ASSERT_EQ(check_strategic(m, f), memoryless_uniform_states(m, f)) << f.to_string();
  }
}

// Nested co-safety and safety bodies may need memory; the product-game
// oracle is the reference and memoryless strategies give a bound.
TEST(CheckStrategicOracle, ObjectivesMatchProductGame) {
  std::mt19937_64 rng(41);
  std::vector<std::string> atoms{"p0", "p1", "p2"};
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Icgs m = small_model(seed);
    Formula body = seed % 2 ? random_cosafety(atoms, rng, 3) : random_safety(atoms, rng, 3);
    Formula f = random_strategic(m, body, rng);
    StateSet got = check_strategic(m, f);
    ASSERT_EQ(got, oracle_product_game(m, f)) << f.to_string();
    StateSet ml = memoryless_uniform_states(m, f);
    if (f.op() == Op::Strategic)
      ASSERT_TRUE(ml.subset_of(got)) << f.to_string();
    else
      ASSERT_TRUE(got.subset_of(ml)) << f.to_string();
  }
}

TEST(CheckStrategicOracle, NestedCoSafetyNeedsMemory) {
  // From u the coalition must visit p then q; u leads to both in turn only
  // by choosing differently on two visits.
  auto doc = std::string(R"({"agents":[{"name":"a","actions":["l","r"]}],
    "states":[{"name":"u","labels":[]},{"name":"v","labels":["p"]},{"name":"w","labels":["q"]}],
    "initial":"u",
    "protocol":[{"agent":"a","state":"u","actions":["l","r"]},{"agent":"a","state":"v","actions":["l"]},
                {"agent":"a","state":"w","actions":["l"]}],
    "transitions":[{"from":"u","action":["l"],"to":"v"},{"from":"u","action":["r"],"to":"w"},
                   {"from":"v","action":["l"],"to":"u"},{"from":"w","action":["l"],"to":"u"}]})");
  Icgs m = load_model(doc);
  Formula f = parse("<<a>> F (p & F q)");
  EXPECT_TRUE(check_strategic(m, f).contains(m.initial()));
  EXPECT_FALSE(memoryless_uniform_states(m, f).contains(m.initial()));
}
