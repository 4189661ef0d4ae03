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


/// \file pipeline.hpp
/// \brief The three-phase verification procedure: candidate sub-models,
/// sub-formula checking on each candidate, then CTL* checking of the
/// residual formula on the full model.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "submc/formula.hpp"
#include "submc/icgs.hpp"
#include "submc/submodel.hpp"
#include "submc/transform.hpp"

namespace submc {

enum class VerdictValue { True, False, Unknown };

const char* to_string(VerdictValue v);

/// `state` indexes the base model; `sub` is a SubformulaNode id.
struct ResultEntry {
  StateIndex state;
  std::size_t sub;
  Variant variant;
  std::string variant_atom;

  friend bool operator==(const ResultEntry&, const ResultEntry&) = default;
};

struct SubformulaOutcome {
  std::vector<ResultEntry> entries;  // node order, then state order, n before p
  std::vector<std::size_t> skipped;  // node ids left unchecked
  std::map<std::size_t, std::string> skip_reason;
};

/// Checks every node of `tree` on both sub-models of `pair`, labelling them
/// with the node atoms as it goes. A node whose body is unsupported, or
/// that depends on a skipped node, is skipped.
///
/// With `base` (the model the pair was cut from), a positive result at s is
/// kept only if s also satisfies E body on `base`, where `base` carries the
/// positive labels of the children (and every state outside the core the
/// existential result). Both are over-approximations, so the intersection
/// is one too.
SubformulaOutcome check_subformulas(CandidatePair& pair, const SubformulaTree& tree,
                                    const Icgs* base = nullptr);

struct VerificationResult {
  VerdictValue value = VerdictValue::Unknown;
  Formula phi_a;
  Formula phi_e;
  bool a_holds = false;
  bool e_holds = false;
};

/// Labels `m` with the variant atoms of `outcome`, builds the residual
/// formulas and decides them at the initial state. For every checked node,
/// states outside `core` also receive the positive variant atom, since the
/// positive sub-model says nothing about them. Throws
/// InternalSoundnessError when the universal check holds while the
/// existential one fails, or when a negative label lacks its positive twin.
VerificationResult verification(Icgs& m, const SubformulaTree& tree, const SubformulaOutcome& outcome,
                                const StateSet& core);

struct CandidateReport {
  std::size_t index = 0;
  StateSet core;
  SubformulaOutcome outcome;
  VerificationResult verification;
  double ms = 0;
};

struct ProcedureOptions {
  unsigned parallel = 1;
  /// Pass the preprocessed model to check_subformulas as `base`.
  bool existential_filter = true;
};

struct ProcedureReport {
  VerdictValue verdict = VerdictValue::Unknown;
  Formula formula;
  Formula preprocessed;
  std::vector<std::pair<std::string, std::string>> atom_map;
  SubformulaTree tree;
  std::size_t candidates = 0;
  EnumerationStats enumeration;
  std::optional<std::size_t> conclusive_candidate;
  /// Candidates 0..conclusive (or all when inconclusive), in index order.
  std::vector<CandidateReport> per_candidate;
  std::map<std::string, double> timings_ms;
};

/// Runs the procedure on `m` (the caller's model is not modified). The
/// verdict and report contents other than timings do not depend on
/// `options.parallel`.
ProcedureReport model_checking_procedure(const Icgs& m, const Formula& f,
                                         const ProcedureOptions& options = {});

/// JSON document for a report; `base` resolves state names. Timings are
/// omitted when `with_timings` is false.
std::string report_json(const ProcedureReport& r, const Icgs& base, bool with_timings = true);

}  // namespace submc
