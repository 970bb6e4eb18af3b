// Copyright 2026 The cl1lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cl1 {

// Connectives of the propositional language. ChAnd/ChOr are the choice
// operators (⊓/⊔); And/Or/Neg/Imp are the parallel ones.
enum class Op { Atom, Top, Bot, Neg, And, Or, Imp, ChAnd, ChOr };

bool is_choice(Op op);
bool is_nary(Op op);

// Immutable formula tree with structural equality. Nodes are shared, so
// copying a Formula is cheap and substitution rebuilds only the spine.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula f);
  static Formula imp(Formula antecedent, Formula consequent);
  // n-ary constructors; op must be And, Or, ChAnd or ChOr and there must be
  // at least two children.
  static Formula nary(Op op, std::vector<Formula> children);
  static Formula conj(std::vector<Formula> children) { return nary(Op::And, std::move(children)); }
  static Formula disj(std::vector<Formula> children) { return nary(Op::Or, std::move(children)); }
  static Formula ch_and(std::vector<Formula> children) { return nary(Op::ChAnd, std::move(children)); }
  static Formula ch_or(std::vector<Formula> children) { return nary(Op::ChOr, std::move(children)); }

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const std::vector<Formula>& children() const { return node_->children; }
  // 1-based, matching move prefixes.
  const Formula& child(std::size_t i) const { return node_->children.at(i - 1); }
  std::size_t arity() const { return node_->children.size(); }
  std::size_t hash() const { return node_->hash; }

  // Number of ⊓/⊔ nodes anywhere in the tree.
  std::size_t choice_nodes() const { return node_->choice_nodes; }
  // Sum of arities over all ⊓/⊔ nodes.
  std::size_t choice_components() const { return node_->choice_components; }
  // Total number of connectives (every non-leaf node counts once).
  std::size_t connectives() const { return node_->connectives; }

  bool is_elementary() const { return node_->choice_nodes == 0; }

  // Non-logical atoms, sorted.
  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Formula> children;
    std::size_t hash = 0;
    std::size_t choice_nodes = 0;
    std::size_t choice_components = 0;
    std::size_t connectives = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Canonical ASCII rendering: ~ & | * + -> with 1/0 for ⊤/⊥. Parentheses are
// emitted only where precedence or n-ary flattening would otherwise change
// the tree, so parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);
std::string to_unicode(const Formula& f);

// Replace every outermost ⊔ by ⊥ and every outermost ⊓ by ⊤.
Formula elementarize(const Formula& f);

}  // namespace cl1
