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


#include "submc/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <set>
#include <thread>

#include "submc/ctlstar.hpp"
#include "submc/errors.hpp"
#include "submc/game.hpp"

namespace submc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

const char* to_string(VerdictValue v) {
  switch (v) {
    case VerdictValue::True:
      return "true";
    case VerdictValue::False:
      return "false";
    case VerdictValue::Unknown:
      return "unknown";
  }
  return "unknown";
}

SubformulaOutcome check_subformulas(CandidatePair& pair, const SubformulaTree& tree,
                                    const Icgs* base) {
  SubformulaOutcome out;
  std::set<std::size_t> skipped;
  const auto core = pair.core.elements();
  std::optional<Icgs> over;
  if (base) over = *base;
  for (const auto& node : tree.nodes) {
    auto blocked = std::find_if(node.children.begin(), node.children.end(),
                                [&](std::size_t c) { return skipped.contains(c); });
    if (blocked != node.children.end()) {
      skipped.insert(node.id);
      out.skip_reason[node.id] = "depends on skipped " + tree.atom(*blocked);
      continue;
    }
    StateSet sat_n, sat_p, exist;
    try {
      sat_n = check_strategic(pair.neg.model, node.formula);
      sat_p = check_strategic(pair.pos.model, node.formula);
      if (over) exist = sat_ctlstar(*over, Formula::exists(node.formula.lhs()));
    } catch (const UnsupportedFormula& e) {
      skipped.insert(node.id);
      out.skip_reason[node.id] = e.what();
      continue;
    }
    AtomIndex an = pair.neg.add_atom(node.atom);
    AtomIndex ap = pair.pos.add_atom(node.atom);
    for (StateIndex s : core) {
      StateIndex sn = *pair.neg.from_base[s];
      StateIndex sp = *pair.pos.from_base[s];
      if (sat_n.contains(sn)) {
        pair.neg.model.set_label(sn, an);
        out.entries.push_back({s, node.id, Variant::Negative, tree.variant_atom(node.id, Variant::Negative)});
      }
      if (sat_p.contains(sp) && (!over || exist.contains(s))) {
        pair.pos.model.set_label(sp, ap);
        out.entries.push_back({s, node.id, Variant::Positive, tree.variant_atom(node.id, Variant::Positive)});
      } else if (over) {
        exist.erase(s);
      }
    }
    if (over) {
      // exist now holds the positive result on the core and the existential
      // one elsewhere.
      AtomIndex a = over->add_atom(node.atom);
      for (StateIndex s : exist.elements()) over->set_label(s, a);
    }
  }
  out.skipped.assign(skipped.begin(), skipped.end());
  return out;
}

VerificationResult verification(Icgs& m, const SubformulaTree& tree, const SubformulaOutcome& outcome,
                                const StateSet& core) {
  const std::set<std::size_t> skipped(outcome.skipped.begin(), outcome.skipped.end());
  std::map<std::size_t, std::set<StateIndex>> labelled_n, labelled_p;
  for (const auto& e : outcome.entries)
    (e.variant == Variant::Negative ? labelled_n : labelled_p)[e.sub].insert(e.state);

  for (const auto& node : tree.nodes) {
    if (skipped.contains(node.id)) continue;
    const auto& ns = labelled_n[node.id];
    const auto& ps = labelled_p[node.id];
    if (!std::includes(ps.begin(), ps.end(), ns.begin(), ns.end()))
      throw InternalSoundnessError("negative labels of " + tree.atom(node.id) +
                                   " are not contained in its positive labels");
    AtomIndex an = m.add_atom(tree.variant_atom(node.id, Variant::Negative));
    AtomIndex ap = m.add_atom(tree.variant_atom(node.id, Variant::Positive));
    for (StateIndex s : ns) m.set_label(s, an);
    for (StateIndex s : ps) m.set_label(s, ap);
    for (StateIndex s = 0; s < m.num_states(); ++s)
      if (!core.contains(s)) m.set_label(s, ap);
  }

  // Leaves first, so a node's shape in psi_n / psi_p already has its
  // substituted children collapsed.
  Formula original = tree.residue;
  for (auto it = tree.nodes.rbegin(); it != tree.nodes.rend(); ++it)
    original = substitute_atom(original, it->atom, it->original);
  Formula psi_n = original, psi_p = original;
  std::map<std::size_t, Formula> cur_n, cur_p;
  for (const auto& node : tree.nodes) {
    Formula body_n = node.formula.lhs(), body_p = node.formula.lhs();
    for (std::size_t c : node.children) {
      body_n = substitute_atom(body_n, tree.atom(c), cur_n.at(c));
      body_p = substitute_atom(body_p, tree.atom(c), cur_p.at(c));
    }
    cur_n[node.id] = Formula::with_children(node.formula, {body_n});
    cur_p[node.id] = Formula::with_children(node.formula, {body_p});
    if (!labelled_n[node.id].empty()) {
      const std::string a = tree.variant_atom(node.id, Variant::Negative);
      psi_n = update_formula(psi_n, cur_n[node.id], a);
      cur_n[node.id] = Formula::atom(a);
    }
    if (!labelled_p[node.id].empty()) {
      const std::string a = tree.variant_atom(node.id, Variant::Positive);
      psi_p = update_formula(psi_p, cur_p[node.id], a);
      cur_p[node.id] = Formula::atom(a);
    }
  }

  VerificationResult r;
  r.phi_a = atl_to_ctl(psi_n, Variant::Negative);
  r.phi_e = atl_to_ctl(psi_p, Variant::Positive);
  r.a_holds = check_ctlstar(m, m.initial(), r.phi_a);
  r.e_holds = check_ctlstar(m, m.initial(), r.phi_e);
  if (r.a_holds && !r.e_holds)
    throw InternalSoundnessError("universal check holds while existential check fails: " +
                                 r.phi_a.to_string() + " / " + r.phi_e.to_string());
  r.value = r.a_holds ? VerdictValue::True : (!r.e_holds ? VerdictValue::False : VerdictValue::Unknown);
  return r;
}

ProcedureReport model_checking_procedure(const Icgs& m, const Formula& f,
                                         const ProcedureOptions& options) {
  const auto t_start = Clock::now();
  ProcedureReport rep;
  rep.formula = f;

  auto t0 = Clock::now();
  PreprocessedProblem pre = preprocess(m, f);
  rep.preprocessed = pre.formula;
  rep.atom_map = pre.atom_map;
  rep.timings_ms["preprocess"] = ms_since(t0);

  t0 = Clock::now();
  auto cores = enumerate_cores(pre.model, resolve_agents(pre.model, coalition_agents(pre.formula)),
                               &rep.enumeration);
  rep.candidates = cores.size();
  rep.timings_ms["enumerate"] = ms_since(t0);

  rep.tree = subformulas(pre.formula, {pre.model.atoms().begin(), pre.model.atoms().end()});

  // A candidate that throws counts as conclusive for scheduling, so no
  // worker goes past it; the lowest such index decides what is reported.
  std::vector<std::optional<CandidateReport>> results(cores.size());
  std::vector<std::exception_ptr> errors(cores.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{cores.size()};  // lowest conclusive index so far
  auto settle = [&](std::size_t i) {
    std::size_t cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  };

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= cores.size() || i > best.load()) return;
      try {
        const auto tc = Clock::now();
        CandidateReport cr;
        cr.index = i;
        cr.core = cores[i];
        CandidatePair pair{cores[i], generate_negative(pre.model, cores[i]),
                           generate_positive(pre.model, cores[i])};
        cr.outcome = check_subformulas(pair, rep.tree,
                                       options.existential_filter ? &pre.model : nullptr);
        Icgs fresh = pre.model;
        cr.verification = verification(fresh, rep.tree, cr.outcome, cores[i]);
        cr.ms = ms_since(tc);
        if (cr.verification.value != VerdictValue::Unknown) settle(i);
        results[i] = std::move(cr);
      } catch (...) {
        errors[i] = std::current_exception();
        settle(i);
      }
    }
  };

  t0 = Clock::now();
  const unsigned threads = std::max(1u, std::min<unsigned>(options.parallel, cores.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  rep.timings_ms["candidates"] = ms_since(t0);

  const std::size_t last = best.load();
  for (std::size_t i = 0; i < cores.size() && i <= last; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    rep.per_candidate.push_back(std::move(*results[i]));
  }
  if (best.load() < cores.size()) {
    rep.conclusive_candidate = best.load();
    rep.verdict = rep.per_candidate.back().verification.value;
  }
  rep.timings_ms["total"] = ms_since(t_start);
  return rep;
}

}  // namespace submc
