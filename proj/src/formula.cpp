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


#include "submc/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace submc {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<std::string> coalition;
  std::vector<Formula> kids;
};

namespace {

const std::string kEmpty;
const std::vector<std::string> kNoCoalition;

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula Formula::top() { return Formula(std::make_shared<Node>(Node{Op::True, {}, {}, {}})); }
Formula Formula::bottom() { return Formula(std::make_shared<Node>(Node{Op::False, {}, {}, {}})); }
Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<Node>(Node{Op::Atom, std::move(name), {}, {}}));
}
Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Node{Op::Not, {}, {}, {std::move(f)}}));
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{Op::And, {}, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{Op::Or, {}, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::strategic(std::vector<std::string> coalition, Formula body) {
  return Formula(std::make_shared<Node>(
      Node{Op::Strategic, {}, std::move(coalition), {std::move(body)}}));
}
Formula Formula::strategic_dual(std::vector<std::string> coalition, Formula body) {
  return Formula(std::make_shared<Node>(
      Node{Op::StrategicDual, {}, std::move(coalition), {std::move(body)}}));
}
Formula Formula::forall(Formula body) {
  return Formula(std::make_shared<Node>(Node{Op::ForAll, {}, {}, {std::move(body)}}));
}
Formula Formula::exists(Formula body) {
  return Formula(std::make_shared<Node>(Node{Op::Exists, {}, {}, {std::move(body)}}));
}
Formula Formula::next(Formula f) {
  return Formula(std::make_shared<Node>(Node{Op::Next, {}, {}, {std::move(f)}}));
}
Formula Formula::until(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{Op::Until, {}, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::release(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{Op::Release, {}, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::finally(Formula f) {
  return Formula(std::make_shared<Node>(Node{Op::Finally, {}, {}, {std::move(f)}}));
}
Formula Formula::globally(Formula f) {
  return Formula(std::make_shared<Node>(Node{Op::Globally, {}, {}, {std::move(f)}}));
}

Formula Formula::with_children(const Formula& like, std::vector<Formula> children) {
  if (children.size() != like.arity())
    throw std::invalid_argument("with_children: arity mismatch");
  bool same = true;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (children[i].node_ != like.node_->kids[i].node_) same = false;
  if (same) return like;
  return Formula(std::make_shared<Node>(
      Node{like.op(), like.node_->name, like.node_->coalition, std::move(children)}));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->op == Op::Atom ? node_->name : kEmpty; }
const std::vector<std::string>& Formula::coalition() const {
  return is_strategic() ? node_->coalition : kNoCoalition;
}
std::size_t Formula::arity() const { return node_->kids.size(); }
const Formula& Formula::child(std::size_t i) const { return node_->kids.at(i); }

bool Formula::is_temporal() const {
  switch (op()) {
    case Op::Next:
    case Op::Until:
    case Op::Release:
    case Op::Finally:
    case Op::Globally:
      return true;
    default:
      return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
  if (auto c = a.node_->coalition <=> b.node_->coalition; c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (auto c = a.child(i) <=> b.child(i); c != 0) return c;
  return std::strong_ordering::equal;
}

// Printing. Binding levels: 1 `|`, 2 `&`, 3 `U R` and quantifiers (whose
// body swallows a U/R chain), 4 prefix operators, 5 primaries.
namespace {

int level(const Formula& f) {
  switch (f.op()) {
    case Op::Or:
      return 1;
    case Op::And:
      return 2;
    case Op::Until:
    case Op::Release:
    case Op::Strategic:
    case Op::StrategicDual:
    case Op::ForAll:
    case Op::Exists:
      return 3;
    case Op::Not:
    case Op::Next:
    case Op::Finally:
    case Op::Globally:
      return 4;
    default:
      return 5;
  }
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out;
}

void print(const Formula& f, int required, std::string& out) {
  const bool paren = level(f) < required;
  if (paren) out += '(';
  switch (f.op()) {
    case Op::True:
      out += "true";
      break;
    case Op::False:
      out += "false";
      break;
    case Op::Atom:
      out += f.name();
      break;
    case Op::Not:
      out += '!';
      print(f.lhs(), 4, out);
      break;
    case Op::Next:
    case Op::Finally:
    case Op::Globally:
      out += f.op() == Op::Next ? "X " : f.op() == Op::Finally ? "F " : "G ";
      print(f.lhs(), 4, out);
      break;
    case Op::And:
    case Op::Or:
      print(f.lhs(), level(f), out);
      out += f.op() == Op::And ? " & " : " | ";
      print(f.rhs(), level(f) + 1, out);
      break;
    case Op::Until:
    case Op::Release:
      print(f.lhs(), 4, out);
      out += f.op() == Op::Until ? " U " : " R ";
      print(f.rhs(), 3, out);
      break;
    case Op::Strategic:
      out += "<<" + join(f.coalition()) + ">> ";
      print(f.lhs(), 3, out);
      break;
    case Op::StrategicDual:
      out += "[[" + join(f.coalition()) + "]] ";
      print(f.lhs(), 3, out);
      break;
    case Op::ForAll:
    case Op::Exists:
      out += f.op() == Op::ForAll ? "A " : "E ";
      print(f.lhs(), 3, out);
      break;
  }
  if (paren) out += ')';
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.op() == Op::Atom) {
    for (const auto& a : out)
      if (a == f.name()) return;
    out.push_back(f.name());
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.child(i), out);
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::size_t temporal_depth(const Formula& f) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) d = std::max(d, temporal_depth(f.child(i)));
  return d + ((f.is_temporal() || f.is_quantifier()) ? 1 : 0);
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) n += formula_size(f.child(i));
  return n;
}

}  // namespace submc
