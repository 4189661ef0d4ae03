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

#include "submc/errors.hpp"
#include "submc/formula.hpp"
#include "submc/oracle.hpp"
#include "submc/transform.hpp"
#include "support.hpp"

using namespace submc;
using namespace submc::testing;

namespace {

Formula P(const char* text) { return parse(text); }

bool has_strategic(const Formula& f) {
  if (f.is_strategic()) return true;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (has_strategic(f.child(i))) return true;
  return false;
}

// On a perfect-information model with agents `ag`, <<>> and [[Ag]] are A,
// <<Ag>> and [[]] are E.
Formula to_path_quantifiers(const Formula& f) {
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(to_path_quantifiers(f.child(i)));
  if (!f.is_strategic()) return f.arity() ? Formula::with_children(f, kids) : f;
  bool universal = f.coalition().empty() == (f.op() == Op::Strategic);
  return universal ? Formula::forall(kids[0]) : Formula::exists(kids[0]);
}

// Randomly rewrites A/E into the strategic forms above.
Formula to_strategic(const Formula& f, const std::vector<std::string>& ag, std::mt19937_64& rng) {
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(to_strategic(f.child(i), ag, rng));
  if (!f.is_path_quantifier()) return f.arity() ? Formula::with_children(f, kids) : f;
  bool dual = std::bernoulli_distribution(0.5)(rng);
  bool universal = f.op() == Op::ForAll;
  std::vector<std::string> g = (universal != dual) ? std::vector<std::string>{} : ag;
  return dual ? Formula::strategic_dual(g, kids[0]) : Formula::strategic(g, kids[0]);
}

}  // namespace

TEST(Parse, RoverFormula) {
  Formula f = P("<<rover>> F ((oc & rm) & F ((pl | pr) & F (oc & rm)))");
  ASSERT_EQ(f.op(), Op::Strategic);
  EXPECT_EQ(f.coalition(), std::vector<std::string>{"rover"});
  const Formula& body = f.lhs();
  ASSERT_EQ(body.op(), Op::Finally);
  ASSERT_EQ(body.lhs().op(), Op::And);
  EXPECT_EQ(body.lhs().lhs(), Formula::conj(Formula::atom("oc"), Formula::atom("rm")));
  EXPECT_EQ(body.lhs().rhs().op(), Op::Finally);
}

TEST(Parse, Basics) {
  EXPECT_EQ(P("q"), Formula::atom("q"));
  EXPECT_EQ(P("true"), Formula::top());
  EXPECT_EQ(P("[[a,b]] X p").op(), Op::StrategicDual);
  EXPECT_EQ(P("[[a,b]] X p").coalition(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(P("A G p").op(), Op::ForAll);
  EXPECT_EQ(P("E F p").op(), Op::Exists);
  EXPECT_EQ(P("<<>> X p").coalition().size(), 0u);
}

TEST(Parse, Precedence) {
  EXPECT_EQ(P("a | b & c"), Formula::disj(P("a"), Formula::conj(P("b"), P("c"))));
  EXPECT_EQ(P("a -> b"), Formula::disj(Formula::negation(P("a")), P("b")));
  EXPECT_EQ(P("E a U b & c"), Formula::conj(P("E (a U b)"), P("c")));
  EXPECT_THROW(P("E a & b U c"), ScopeError);
  EXPECT_EQ(P("<<x>> p U q").lhs().op(), Op::Until);
  EXPECT_EQ(P("E !a U b"), Formula::exists(Formula::until(Formula::negation(P("a")), P("b"))));
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("X p"), ScopeError);
  EXPECT_THROW(P("p U q"), ScopeError);
  EXPECT_THROW(P("<<a,>> X p"), ArityError);
  EXPECT_THROW(P("<<a,a>> X p"), ArityError);
  EXPECT_THROW(P("(p & q"), ParseError);
  EXPECT_THROW(P("p &"), ParseError);
  try {
    P("p & & q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_NO_THROW(parse("X p", Scope::Path));
}

TEST(Formula, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  std::vector<std::string> atoms{"p", "q", "r"};
  for (int k = 0; k < 2000; ++k) {
    Formula f = random_ctlstar(atoms, rng, 4);
    if (k % 2) f = to_strategic(f, {"a", "b"}, rng);
    ASSERT_EQ(parse(f.to_string()), f) << f.to_string();
  }
  for (const auto& text : rover_formulas()) EXPECT_EQ(parse(P(text.c_str()).to_string()), P(text.c_str()));
}

TEST(Nnf, Examples) {
  EXPECT_EQ(to_nnf(P("!!q")), P("q"));
  EXPECT_EQ(to_nnf(P("!<<g>> X p")), P("[[g]] X !p"));
  EXPECT_EQ(to_nnf(P("!E (p U q)")), P("A (!p R !q)"));
  EXPECT_EQ(to_nnf(P("!A (p R q)")), P("E (!p U !q)"));
  EXPECT_EQ(to_nnf(P("![[g]] F p")), P("<<g>> G !p"));
  EXPECT_EQ(to_nnf(P("!(p & !q)")), P("!p | q"));
  EXPECT_EQ(to_nnf(P("!true")), P("false"));
  EXPECT_TRUE(is_nnf(to_nnf(P(rover_formulas()[2].c_str()))));
  EXPECT_FALSE(is_nnf(P("!(p & q)")));
}

TEST(Nnf, IdempotentAndNormal) {
  std::mt19937_64 rng(11);
  std::vector<std::string> atoms{"p", "q", "r"};
  for (int k = 0; k < 2000; ++k) {
    Formula f = to_strategic(random_ctlstar(atoms, rng, 4), {"a", "b"}, rng);
    Formula n = to_nnf(f);
    ASSERT_TRUE(is_nnf(n)) << n.to_string();
    ASSERT_EQ(to_nnf(n), n);
  }
}

// NNF preserves semantics; compared with the reference CTL* evaluator on
// perfect-information models where the only coalitions are {} and Ag.
TEST(Nnf, PreservesSemantics) {
  std::mt19937_64 rng(13);
  std::vector<std::string> atoms{"p0", "p1", "p2"};
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Icgs m = small_model(seed);
    std::vector<std::string> ag;
    for (AgentIndex i = 0; i < m.num_agents(); ++i) ag.push_back(m.agent(i).name);
    Formula f = to_strategic(random_ctlstar(atoms, rng, 3), ag, rng);
    StateSet want = oracle_ctlstar(m, to_path_quantifiers(f));
    ASSERT_EQ(oracle_ctlstar(m, to_path_quantifiers(to_nnf(f))), want) << f.to_string();
  }
}

TEST(NegatedAtoms, ExtractAndReplace) {
  Formula phi3 = to_nnf(P(rover_formulas()[2].c_str()));
  EXPECT_EQ(extract_negated_atoms(phi3), std::vector<std::string>{"ip"});
  EXPECT_TRUE(extract_negated_atoms(P(rover_formulas()[0].c_str())).empty());
  EXPECT_EQ(extract_negated_atoms(P("!p & !p")), std::vector<std::string>{"p"});
  EXPECT_EQ(extract_negated_atoms(P("!q | E X (!p & q)")), (std::vector<std::string>{"q", "p"}));

  EXPECT_EQ(replace_negated_atom(P("!ip & rp"), "ip", "nip"), P("nip & rp"));
  EXPECT_EQ(replace_negated_atom(P("q & r"), "p", "np"), P("q & r"));
  EXPECT_EQ(replace_negated_atom(P("!p | !p"), "p", "np"), P("np | np"));
  EXPECT_TRUE(is_negation_free(replace_negated_atom(phi3, "ip", "nip")));
}

TEST(Coalitions, Examples) {
  EXPECT_EQ(coalition_agents(P(rover_formulas()[1].c_str())),
            (std::vector<std::string>{"mechanic", "rover"}));
  EXPECT_TRUE(coalition_agents(P("q")).empty());
  Formula f = Formula::conj(Formula::strategic({"1"}, parse("X p", Scope::Path)),
                            Formula::strategic_dual({"2"}, parse("G q", Scope::Path)));
  EXPECT_EQ(coalition_agents(f), (std::vector<std::string>{"1", "2"}));
}

TEST(Subformulas, PostOrderOnRover) {
  Formula phi_v =
      P("<<g1>> X ([[g2]] (p U r)) & (<<g3>> X p | [[g4]] (q R p))");
  SubformulaTree t = subformulas(phi_v);
  ASSERT_EQ(t.nodes.size(), 4u);
  EXPECT_EQ(t.nodes[0].original, P("[[g2]] (p U r)"));
  EXPECT_EQ(t.nodes[1].original, P("<<g1>> X ([[g2]] (p U r))"));
  EXPECT_EQ(t.nodes[1].formula, P("<<g1>> X atom_1"));
  EXPECT_EQ(t.nodes[1].children, std::vector<std::size_t>{1});
  EXPECT_EQ(t.nodes[2].original, P("<<g3>> X p"));
  EXPECT_EQ(t.nodes[3].original, P("[[g4]] (q R p)"));
  EXPECT_EQ(t.residue, P("atom_2 & (atom_3 | atom_4)"));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(t.nodes[k].atom, "atom_" + std::to_string(k + 1));
  EXPECT_EQ(t.variant_atom(2, Variant::Negative), "natom_2");
  EXPECT_EQ(t.variant_atom(2, Variant::Positive), "patom_2");
}

TEST(Subformulas, RoverPhi2) {
  SubformulaTree t = subformulas(P(rover_formulas()[1].c_str()));
  ASSERT_EQ(t.nodes.size(), 2u);
  EXPECT_EQ(t.nodes[0].formula, P("<<rover>> F ((pl | pr) & F (oc & rm))"));
  EXPECT_EQ(t.nodes[1].formula, P("<<rover,mechanic>> F ((oc & rm) & atom_1)"));
  EXPECT_EQ(t.residue, P("atom_2"));
}

TEST(Subformulas, NoStrategicOperator) {
  SubformulaTree t = subformulas(P("q"));
  EXPECT_TRUE(t.nodes.empty());
  EXPECT_EQ(t.residue, P("q"));
}

TEST(Subformulas, SharedAndFreshAtoms) {
  SubformulaTree t = subformulas(P("<<a>> X p & E X <<a>> X p"));
  EXPECT_EQ(t.nodes.size(), 1u);
  EXPECT_EQ(t.residue, P("atom_1 & E X atom_1"));
  SubformulaTree u = subformulas(P("<<a>> X atom_1"));
  EXPECT_NE(u.prefix, "atom");
  EXPECT_NE(u.nodes[0].atom, "atom_1");
  SubformulaTree v = subformulas(P("<<a>> X q"), {"patom_1"});
  EXPECT_NE(v.prefix, "atom");
}

TEST(Subformulas, ReconstructionProperty) {
  std::mt19937_64 rng(17);
  std::vector<std::string> atoms{"p", "q", "r"};
  for (int k = 0; k < 2000; ++k) {
    Formula f = to_nnf(to_strategic(random_ctlstar(atoms, rng, 4), {"a", "b"}, rng));
    SubformulaTree t = subformulas(f);
    Formula g = t.residue;
    for (auto it = t.nodes.rbegin(); it != t.nodes.rend(); ++it)
      g = substitute_atom(g, it->atom, it->formula);
    ASSERT_EQ(g, f) << f.to_string();
    for (const auto& n : t.nodes) {
      ASSERT_TRUE(n.formula.is_strategic());
      ASSERT_FALSE(has_strategic(n.formula.lhs()));
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
      for (std::size_t j = i + 1; j < t.nodes.size(); ++j) ASSERT_NE(t.nodes[i].original, t.nodes[j].original);
  }
}

TEST(UpdateFormula, Examples) {
  Formula f = P("<<g>> X (<<g>> (p U q))");
  EXPECT_EQ(update_formula(f, P("<<g>> (p U q)"), "atom_1"), P("<<g>> X atom_1"));
  EXPECT_EQ(update_formula(f, P("<<h>> (p U q)"), "atom_1"), f);
  EXPECT_EQ(update_formula(f, f, "atom_1"), P("atom_1"));
  EXPECT_EQ(update_formula(P("q & p"), P("p & q"), "x"), P("q & p"));
}

TEST(AtlToCtl, Examples) {
  Formula body = P("<<rover,mechanic>> F (rp & nip & natom_1)");
  EXPECT_EQ(atl_to_ctl(body, Variant::Negative), P("A F (rp & nip & natom_1)"));
  Formula pbody = P("<<rover,mechanic>> F (rp & nip & patom_1)");
  EXPECT_EQ(atl_to_ctl(pbody, Variant::Positive), P("E F (rp & nip & patom_1)"));
  EXPECT_EQ(atl_to_ctl(P("q"), Variant::Negative), P("q"));
  EXPECT_EQ(atl_to_ctl(P("q"), Variant::Positive), P("q"));
  EXPECT_EQ(atl_to_ctl(P("[[a]] G p"), Variant::Positive), P("E G p"));
}

TEST(AtlToCtl, RemovesEveryStrategicNode) {
  std::mt19937_64 rng(19);
  std::vector<std::string> atoms{"p", "q"};
  for (int k = 0; k < 1000; ++k) {
    Formula f = to_nnf(to_strategic(random_ctlstar(atoms, rng, 4), {"a"}, rng));
    ASSERT_FALSE(has_strategic(atl_to_ctl(f, Variant::Negative)));
    ASSERT_FALSE(has_strategic(atl_to_ctl(f, Variant::Positive)));
  }
}

TEST(FreshName, Suffixes) {
  EXPECT_EQ(fresh_name("s_bot", {}), "s_bot");
  EXPECT_EQ(fresh_name("s_bot", {"s_bot"}), "s_bot_1");
  EXPECT_EQ(fresh_name("s_bot", {"s_bot", "s_bot_1"}), "s_bot_2");
}
