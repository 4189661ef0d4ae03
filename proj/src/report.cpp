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


#include <json.hpp>

#include "submc/pipeline.hpp"

namespace submc {

std::string report_json(const ProcedureReport& r, const Icgs& base, bool with_timings) {
  using nlohmann::json;
  json doc;
  doc["verdict"] = to_string(r.verdict);
  doc["formula"] = r.formula.to_string();
  doc["preprocessed"] = r.preprocessed.to_string();
  doc["candidates"] = r.candidates;
  doc["conclusive_candidate"] =
      r.conclusive_candidate ? json(*r.conclusive_candidate) : json(nullptr);
  json subs = json::array();
  for (const auto& n : r.tree.nodes)
    subs.push_back({{"id", n.id}, {"atom", n.atom}, {"formula", n.formula.to_string()}});
  doc["subformulas"] = subs;
  doc["enumeration"] = {{"explored", r.enumeration.explored},
                        {"discarded_initial", r.enumeration.discarded_initial},
                        {"duplicates", r.enumeration.duplicates}};
  json per = json::array();
  for (const auto& c : r.per_candidate) {
    json core = json::array();
    for (StateIndex s : c.core.elements()) core.push_back(base.state_name(s));
    json entries = json::array();
    for (const auto& e : c.outcome.entries)
      entries.push_back({{"state", base.state_name(e.state)}, {"sub", e.sub}, {"variant_atom", e.variant_atom}});
    json skipped = json::array();
    for (std::size_t id : c.outcome.skipped)
      skipped.push_back({{"sub", id}, {"reason", c.outcome.skip_reason.at(id)}});
    per.push_back({{"core", core},
                   {"entries", entries},
                   {"skipped", skipped},
                   {"phiA", c.verification.phi_a.to_string()},
                   {"phiE", c.verification.phi_e.to_string()},
                   {"A_holds", c.verification.a_holds},
                   {"E_holds", c.verification.e_holds},
                   {"verdict", to_string(c.verification.value)}});
  }
  doc["per_candidate"] = per;
  if (with_timings) {
    json t = json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    doc["timings_ms"] = t;
  }
  return doc.dump(2) + "\n";
}

}  // namespace submc
