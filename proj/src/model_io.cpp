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


#include "submc/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "submc/errors.hpp"

namespace submc {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

const json& array_field(const json& obj, const char* key, const char* where) {
  const json& v = field(obj, key, where);
  if (!v.is_array())
    throw SchemaError(std::string(where) + ": field '" + key + "' must be an array");
  return v;
}

std::string string_value(const json& v, const char* where) {
  if (!v.is_string()) throw SchemaError(std::string(where) + ": expected a string");
  return v.get<std::string>();
}

std::string string_field(const json& obj, const char* key, const char* where) {
  return string_value(field(obj, key, where), where);
}

void require_object(const json& v, const char* where) {
  if (!v.is_object()) throw SchemaError(std::string(where) + ": expected an object");
}

}  // namespace

Icgs load_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  require_object(doc, "model");

  IcgsBuilder b;
  std::map<std::string, AgentIndex> agent_ids;
  std::vector<std::map<std::string, ActionIndex>> action_ids;
  for (const json& a : array_field(doc, "agents", "model")) {
    require_object(a, "agent");
    std::string name = string_field(a, "name", "agent");
    std::vector<std::string> actions;
    for (const json& act : array_field(a, "actions", "agent"))
      actions.push_back(string_value(act, "agent action"));
    AgentIndex i = b.add_agent(name, actions);
    agent_ids[name] = i;
    auto& ids = action_ids.emplace_back();
    for (ActionIndex k = 0; k < actions.size(); ++k) ids[actions[k]] = k;
  }

  std::map<std::string, StateIndex> state_ids;
  for (const json& s : array_field(doc, "states", "model")) {
    require_object(s, "state");
    std::string name = string_field(s, "name", "state");
    state_ids[name] = b.add_state(name);
  }
  // Labels in a second pass so atom order is first appearance in state order.
  for (const json& s : doc["states"]) {
    StateIndex id = state_ids.at(s["name"].get<std::string>());
    if (!s.contains("labels")) continue;
    if (!s["labels"].is_array()) throw SchemaError("state: 'labels' must be an array");
    for (const json& l : s["labels"]) b.add_label(id, b.add_atom(string_value(l, "label")));
  }

  auto state = [&](const std::string& name) {
    auto it = state_ids.find(name);
    if (it == state_ids.end()) throw NameError("unknown state '" + name + "'");
    return it->second;
  };
  auto agent = [&](const std::string& name) {
    auto it = agent_ids.find(name);
    if (it == agent_ids.end()) throw NameError("unknown agent '" + name + "'");
    return it->second;
  };
  auto action = [&](AgentIndex i, const std::string& name) {
    auto it = action_ids[i].find(name);
    if (it == action_ids[i].end())
      throw NameError("unknown action '" + name + "' for agent index " +
                      std::to_string(i));
    return it->second;
  };

  b.set_initial(state(string_field(doc, "initial", "model")));

  for (const json& p : array_field(doc, "protocol", "model")) {
    require_object(p, "protocol entry");
    AgentIndex i = agent(string_field(p, "agent", "protocol entry"));
    StateIndex s = state(string_field(p, "state", "protocol entry"));
    std::vector<ActionIndex> acts;
    for (const json& a : array_field(p, "actions", "protocol entry"))
      acts.push_back(action(i, string_value(a, "protocol action")));
    b.set_protocol(i, s, std::move(acts));
  }

  for (const json& t : array_field(doc, "transitions", "model")) {
    require_object(t, "transition");
    StateIndex from = state(string_field(t, "from", "transition"));
    StateIndex to = state(string_field(t, "to", "transition"));
    const json& act = array_field(t, "action", "transition");
    if (act.size() != b.num_agents())
      throw SchemaError("transition from '" + t["from"].get<std::string>() +
                        "': action has " + std::to_string(act.size()) +
                        " entries, expected " + std::to_string(b.num_agents()));
    JointAction ja;
    for (AgentIndex i = 0; i < act.size(); ++i)
      ja.choice.push_back(action(i, string_value(act[i], "transition action")));
    b.add_transition(from, std::move(ja), to);
  }

  if (doc.contains("indistinguishable")) {
    const json& ind = array_field(doc, "indistinguishable", "model");
    for (const json& e : ind) {
      require_object(e, "indistinguishable entry");
      AgentIndex i = agent(string_field(e, "agent", "indistinguishable entry"));
      const json& pair = array_field(e, "states", "indistinguishable entry");
      if (pair.size() != 2)
        throw SchemaError("indistinguishable entry: 'states' must list two states");
      b.add_indistinguishable(i, state(string_value(pair[0], "state")),
                              state(string_value(pair[1], "state")));
    }
  }
  return b.build();
}

Icgs load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open model file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string serialize_model(const Icgs& m) {
  json doc;
  doc["agents"] = json::array();
  for (AgentIndex i = 0; i < m.num_agents(); ++i)
    doc["agents"].push_back({{"name", m.agent(i).name}, {"actions", m.agent(i).actions}});
  doc["states"] = json::array();
  for (StateIndex s = 0; s < m.num_states(); ++s) {
    // Atom indices follow first occurrence on load, so sort to keep the
    // text stable across a round trip.
    std::vector<std::string> labels = m.label_names(s);
    std::sort(labels.begin(), labels.end());
    doc["states"].push_back({{"name", m.state_name(s)}, {"labels", labels}});
  }
  doc["initial"] = m.state_name(m.initial());
  doc["protocol"] = json::array();
  for (AgentIndex i = 0; i < m.num_agents(); ++i)
    for (StateIndex s = 0; s < m.num_states(); ++s) {
      json acts = json::array();
      for (ActionIndex a : m.protocol(i, s)) acts.push_back(m.agent(i).actions[a]);
      doc["protocol"].push_back(
          {{"agent", m.agent(i).name}, {"state", m.state_name(s)}, {"actions", acts}});
    }
  doc["transitions"] = json::array();
  for (StateIndex s = 0; s < m.num_states(); ++s)
    for (std::size_t k = 0; k < m.num_joint_actions(s); ++k) {
      JointAction a = m.joint_action(s, k);
      json names = json::array();
      for (AgentIndex i = 0; i < m.num_agents(); ++i)
        names.push_back(m.agent(i).actions[a.choice[i]]);
      doc["transitions"].push_back({{"from", m.state_name(s)},
                                    {"action", names},
                                    {"to", m.state_name(m.successor(s, k))}});
    }
  doc["indistinguishable"] = json::array();
  for (AgentIndex i = 0; i < m.num_agents(); ++i)
    for (StateIndex s = 0; s < m.num_states(); ++s) {
      StateIndex rep = m.indist_class(i, s);
      if (rep != s)
        doc["indistinguishable"].push_back(
            {{"agent", m.agent(i).name},
             {"states", {m.state_name(rep), m.state_name(s)}}});
    }
  return doc.dump(2) + "\n";
}

}  // namespace submc
