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


#include "submc/transform.hpp"

#include <algorithm>
#include <map>

namespace submc {

namespace {

Formula map_children(const Formula& f, const auto& fn) {
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(fn(f.child(i)));
  return Formula::with_children(f, std::move(kids));
}

Formula nnf(const Formula& f, bool negate) {
  auto pos = [](const Formula& g) { return nnf(g, false); };
  auto neg = [](const Formula& g) { return nnf(g, true); };
  switch (f.op()) {
    case Op::True:
      return negate ? Formula::bottom() : f;
    case Op::False:
      return negate ? Formula::top() : f;
    case Op::Atom:
      return negate ? Formula::negation(f) : f;
    case Op::Not:
      return nnf(f.lhs(), !negate);
    case Op::And:
      return negate ? Formula::disj(neg(f.lhs()), neg(f.rhs()))
                    : Formula::conj(pos(f.lhs()), pos(f.rhs()));
    case Op::Or:
      return negate ? Formula::conj(neg(f.lhs()), neg(f.rhs()))
                    : Formula::disj(pos(f.lhs()), pos(f.rhs()));
    case Op::Strategic:
      return negate ? Formula::strategic_dual(f.coalition(), neg(f.lhs()))
                    : Formula::strategic(f.coalition(), pos(f.lhs()));
    case Op::StrategicDual:
      return negate ? Formula::strategic(f.coalition(), neg(f.lhs()))
                    : Formula::strategic_dual(f.coalition(), pos(f.lhs()));
    case Op::ForAll:
      return negate ? Formula::exists(neg(f.lhs())) : Formula::forall(pos(f.lhs()));
    case Op::Exists:
      return negate ? Formula::forall(neg(f.lhs())) : Formula::exists(pos(f.lhs()));
    case Op::Next:
      return Formula::next(nnf(f.lhs(), negate));
    case Op::Until:
      return negate ? Formula::release(neg(f.lhs()), neg(f.rhs()))
                    : Formula::until(pos(f.lhs()), pos(f.rhs()));
    case Op::Release:
      return negate ? Formula::until(neg(f.lhs()), neg(f.rhs()))
                    : Formula::release(pos(f.lhs()), pos(f.rhs()));
    case Op::Finally:
      return negate ? Formula::globally(neg(f.lhs())) : Formula::finally(pos(f.lhs()));
    case Op::Globally:
      return negate ? Formula::finally(neg(f.lhs())) : Formula::globally(pos(f.lhs()));
  }
  return f;
}

void negated_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.op() == Op::Not && f.lhs().op() == Op::Atom) {
    if (std::find(out.begin(), out.end(), f.lhs().name()) == out.end())
      out.push_back(f.lhs().name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) negated_atoms(f.child(i), out);
}

bool is_numbered(const std::string& name, const std::string& prefix) {
  std::string_view v = name;
  if (!v.empty() && (v[0] == 'n' || v[0] == 'p') && v.substr(1).starts_with(prefix + "_"))
    v.remove_prefix(1);
  if (!v.starts_with(prefix + "_")) return false;
  v.remove_prefix(prefix.size() + 1);
  return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct Extractor {
  SubformulaTree& tree;
  std::map<Formula, std::size_t> index;  // collapsed formula -> node id

  // Returns the collapsed form of f; records ids of strategic nodes that
  // appear directly (not nested under another strategic node) in `found`.
  Formula visit(const Formula& f, std::vector<std::size_t>& found) {
    if (!f.is_strategic()) {
      return map_children(f, [&](const Formula& c) { return visit(c, found); });
    }
    std::vector<std::size_t> inner;
    Formula body = visit(f.lhs(), inner);
    Formula collapsed = Formula::with_children(f, {body});
    std::size_t id;
    if (auto it = index.find(collapsed); it != index.end()) {
      id = it->second;
    } else {
      id = tree.nodes.size() + 1;
      std::sort(inner.begin(), inner.end());
      inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
      tree.nodes.push_back({id, tree.atom(id), collapsed, f, inner});
      index.emplace(collapsed, id);
    }
    found.push_back(id);
    return Formula::atom(tree.atom(id));
  }
};

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

bool is_nnf(const Formula& f) {
  if (f.op() == Op::Not) return f.lhs().op() == Op::Atom;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!is_nnf(f.child(i))) return false;
  return true;
}

bool is_negation_free(const Formula& f) {
  if (f.op() == Op::Not) return false;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!is_negation_free(f.child(i))) return false;
  return true;
}

std::vector<std::string> extract_negated_atoms(const Formula& f) {
  std::vector<std::string> out;
  negated_atoms(f, out);
  return out;
}

Formula replace_negated_atom(const Formula& f, const std::string& p, const std::string& np) {
  if (f.op() == Op::Not && f.lhs().op() == Op::Atom && f.lhs().name() == p)
    return Formula::atom(np);
  return map_children(f, [&](const Formula& c) { return replace_negated_atom(c, p, np); });
}

std::vector<std::string> coalition_agents(const Formula& f) {
  std::set<std::string> acc;
  auto walk = [&](const auto& self, const Formula& g) -> void {
    for (const auto& a : g.coalition()) acc.insert(a);
    for (std::size_t i = 0; i < g.arity(); ++i) self(self, g.child(i));
  };
  walk(walk, f);
  return {acc.begin(), acc.end()};
}

Formula update_formula(const Formula& f, const Formula& target, const std::string& atom) {
  if (f == target) return Formula::atom(atom);
  return map_children(f, [&](const Formula& c) { return update_formula(c, target, atom); });
}

Formula substitute_atom(const Formula& f, const std::string& atom, const Formula& replacement) {
  if (f.op() == Op::Atom && f.name() == atom) return replacement;
  return map_children(f, [&](const Formula& c) { return substitute_atom(c, atom, replacement); });
}

Formula atl_to_ctl(const Formula& f, Variant v) {
  Formula g = map_children(f, [&](const Formula& c) { return atl_to_ctl(c, v); });
  if (!g.is_strategic()) return g;
  return v == Variant::Negative ? Formula::forall(g.lhs()) : Formula::exists(g.lhs());
}

std::string SubformulaTree::atom(std::size_t id) const {
  return prefix + "_" + std::to_string(id);
}

std::string SubformulaTree::variant_atom(std::size_t id, Variant v) const {
  return (v == Variant::Negative ? "n" : "p") + atom(id);
}

SubformulaTree subformulas(const Formula& f, const std::set<std::string>& reserved) {
  std::set<std::string> taken = reserved;
  for (auto& a : atoms_of(f)) taken.insert(a);
  SubformulaTree tree{"atom", {}, f};
  auto clashes = [&] {
    return std::any_of(taken.begin(), taken.end(),
                       [&](const std::string& n) { return is_numbered(n, tree.prefix); });
  };
  while (clashes()) tree.prefix += "x";
  Extractor ex{tree, {}};
  std::vector<std::size_t> top;
  tree.residue = ex.visit(f, top);
  return tree;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.contains(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string c = base + "_" + std::to_string(k);
    if (!taken.contains(c)) return c;
  }
}

}  // namespace submc
