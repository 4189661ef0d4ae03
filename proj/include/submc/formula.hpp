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


/// \file formula.hpp
/// \brief ATL* / CTL* syntax trees, the concrete grammar, and printing.
#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace submc {

enum class Op {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Strategic,      // <<G>> body
  StrategicDual,  // [[G]] body
  ForAll,         // A body
  Exists,         // E body
  Next,
  Until,
  Release,
  Finally,
  Globally,
};

/// Immutable formula handle. Copies share structure; comparison is
/// structural (exact shape, coalition members in written order).
class Formula {
 public:
  /// The constant true.
  Formula();
  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula strategic(std::vector<std::string> coalition, Formula body);
  static Formula strategic_dual(std::vector<std::string> coalition, Formula body);
  static Formula forall(Formula body);
  static Formula exists(Formula body);
  static Formula next(Formula f);
  static Formula until(Formula a, Formula b);
  static Formula release(Formula a, Formula b);
  static Formula finally(Formula f);
  static Formula globally(Formula f);

  /// Rebuilds a node of the same kind as `like` with new children.
  static Formula with_children(const Formula& like, std::vector<Formula> children);

  Op op() const;
  /// Atom name; empty for other nodes.
  const std::string& name() const;
  /// Coalition of a strategic node; empty for other nodes.
  const std::vector<std::string>& coalition() const;
  std::size_t arity() const;
  const Formula& child(std::size_t i) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  bool is_strategic() const { return op() == Op::Strategic || op() == Op::StrategicDual; }
  bool is_path_quantifier() const { return op() == Op::ForAll || op() == Op::Exists; }
  bool is_quantifier() const { return is_strategic() || is_path_quantifier(); }
  bool is_temporal() const;

  /// Canonical text; parse(to_string()) reproduces the tree.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Which syntactic category the parser accepts at top level.
enum class Scope { State, Path };

/// Grammar, loosest first: `->` (right), `|`, `&`, `U`/`R` (right), then
/// prefix operators `! X F G A E <<..>> [[..]]`. A quantifier's body extends
/// over a whole U/R expression, so `<<a>> p U q` is `<<a>>(p U q)`. `a -> b`
/// is read as `!a | b`. In Scope::State, temporal operators must sit under a
/// quantifier (ScopeError otherwise).
Formula parse(std::string_view text, Scope scope = Scope::State);

/// Atoms in first-occurrence order (left to right).
std::vector<std::string> atoms_of(const Formula& f);

/// Nesting depth of temporal operators and quantifiers.
std::size_t temporal_depth(const Formula& f);

/// Number of nodes.
std::size_t formula_size(const Formula& f);

}  // namespace submc
