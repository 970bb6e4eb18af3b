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

#include "cl1/formula.hpp"

#include <stdexcept>
#include <utility>

namespace cl1 {

bool is_choice(Op op) { return op == Op::ChAnd || op == Op::ChOr; }

bool is_nary(Op op) {
  return op == Op::And || op == Op::Or || op == Op::ChAnd || op == Op::ChOr;
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Op op, std::string name, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  node->children = std::move(children);

  std::size_t h = mix(0, static_cast<std::size_t>(op));
  if (op == Op::Atom) h = mix(h, std::hash<std::string>{}(node->name));
  for (const Formula& c : node->children) {
    h = mix(h, c.hash());
    node->choice_nodes += c.choice_nodes();
    node->choice_components += c.choice_components();
    node->connectives += c.connectives();
  }
  if (is_choice(op)) {
    node->choice_nodes += 1;
    node->choice_components += node->children.size();
  }
  if (!node->children.empty()) node->connectives += 1;
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be non-empty");
  return make(Op::Atom, std::move(name), {});
}

Formula Formula::top() { return make(Op::Top, {}, {}); }
Formula Formula::bot() { return make(Op::Bot, {}, {}); }
Formula Formula::neg(Formula f) { return make(Op::Neg, {}, {std::move(f)}); }

Formula Formula::imp(Formula antecedent, Formula consequent) {
  return make(Op::Imp, {}, {std::move(antecedent), std::move(consequent)});
}

Formula Formula::nary(Op op, std::vector<Formula> children) {
  if (!is_nary(op)) throw std::invalid_argument("not an n-ary connective");
  if (children.size() < 2) throw std::invalid_argument("n-ary connective needs at least two operands");
  return make(op, {}, std::move(children));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.arity() != b.arity()) return false;
  if (a.op() == Op::Atom) return a.name() == b.name();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.node_->children[i] != b.node_->children[i]) return false;
  }
  return true;
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->op() == Op::Atom) out.insert(f->name());
    for (const Formula& c : f->children()) stack.push_back(&c);
  }
  return out;
}

Formula elementarize(const Formula& f) {
  switch (f.op()) {
    case Op::ChOr:
      return Formula::bot();
    case Op::ChAnd:
      return Formula::top();
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
      return f;
    default:
      break;
  }
  if (f.is_elementary()) return f;
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  for (const Formula& c : f.children()) kids.push_back(elementarize(c));
  if (f.op() == Op::Neg) return Formula::neg(std::move(kids[0]));
  if (f.op() == Op::Imp) return Formula::imp(std::move(kids[0]), std::move(kids[1]));
  return Formula::nary(f.op(), std::move(kids));
}

namespace {

// Binding strength; larger binds tighter.
int precedence(Op op) {
  switch (op) {
    case Op::Imp: return 1;
    case Op::ChOr: return 2;
    case Op::ChAnd: return 3;
    case Op::Or: return 4;
    case Op::And: return 5;
    case Op::Neg: return 6;
    default: return 7;
  }
}

struct Symbols {
  const char* top;
  const char* bot;
  const char* neg;
  const char* imp;
  const char* conj;
  const char* disj;
  const char* ch_and;
  const char* ch_or;
};

constexpr Symbols kAscii{"1", "0", "~", " -> ", " & ", " | ", " * ", " + "};
constexpr Symbols kUnicode{"⊤", "⊥", "¬", " → ", " ∧ ", " ∨ ", " ⊓ ", " ⊔ "};

void render(const Formula& f, int needed, const Symbols& sym, std::string& out) {
  const int prec = precedence(f.op());
  const bool parens = prec < needed;
  if (parens) out += '(';
  switch (f.op()) {
    case Op::Atom: out += f.name(); break;
    case Op::Top: out += sym.top; break;
    case Op::Bot: out += sym.bot; break;
    case Op::Neg:
      out += sym.neg;
      render(f.child(1), precedence(Op::Neg), sym, out);
      break;
    case Op::Imp:
      render(f.child(1), prec + 1, sym, out);
      out += sym.imp;
      render(f.child(2), prec, sym, out);
      break;
    default: {
      const char* sep = f.op() == Op::And   ? sym.conj
                        : f.op() == Op::Or  ? sym.disj
                        : f.op() == Op::ChAnd ? sym.ch_and
                                              : sym.ch_or;
      for (std::size_t i = 1; i <= f.arity(); ++i) {
        if (i > 1) out += sep;
        render(f.child(i), prec + 1, sym, out);
      }
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  render(f, 0, kAscii, out);
  return out;
}

std::string to_unicode(const Formula& f) {
  std::string out;
  render(f, 0, kUnicode, out);
  return out;
}

}  // namespace cl1
