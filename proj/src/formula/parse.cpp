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

#include "cl1/parse.hpp"

#include <array>
#include <utility>
#include <vector>

namespace cl1 {
namespace {

enum class Tok { Atom, One, Zero, Not, And, Or, ChAnd, ChOr, Imp, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

struct Spelling {
  std::string_view text;
  Tok kind;
};

// Longest spellings first where prefixes overlap.
constexpr std::array<Spelling, 19> kSpellings{{
    {"->", Tok::Imp},  {"→", Tok::Imp},   {"~", Tok::Not},   {"¬", Tok::Not},
    {"&", Tok::And},   {"∧", Tok::And},   {"|", Tok::Or},    {"∨", Tok::Or},
    {"*", Tok::ChAnd}, {"⊓", Tok::ChAnd}, {"+", Tok::ChOr},  {"⊔", Tok::ChOr},
    {"(", Tok::LParen}, {")", Tok::RParen}, {"1", Tok::One},  {"⊤", Tok::One},
    {"0", Tok::Zero},  {"⊥", Tok::Zero},  {"", Tok::End},
}};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident_tail(char c) { return is_lower(c) || (c >= '0' && c <= '9') || c == '_'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (is_lower(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_ident_tail(text[j])) ++j;
      out.push_back({Tok::Atom, i, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    bool matched = false;
    for (const Spelling& s : kSpellings) {
      if (s.text.empty()) continue;
      if (text.substr(i, s.text.size()) == s.text) {
        out.push_back({s.kind, i, std::string(s.text)});
        i += s.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(i, "unexpected character");
  }
  out.push_back({Tok::End, text.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  Formula implication() {
    Formula lhs = chain(Tok::ChOr);
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::imp(std::move(lhs), implication());
    }
    return lhs;
  }

  // Parses one level of the n-ary hierarchy: ChOr > ChAnd > Or > And.
  Formula chain(Tok level) {
    std::vector<Formula> items{operand(level)};
    while (peek().kind == level) {
      next();
      items.push_back(operand(level));
    }
    if (items.size() == 1) return std::move(items.front());
    return Formula::nary(op_for(level), std::move(items));
  }

  Formula operand(Tok level) {
    switch (level) {
      case Tok::ChOr: return chain(Tok::ChAnd);
      case Tok::ChAnd: return chain(Tok::Or);
      case Tok::Or: return chain(Tok::And);
      default: return unary();
    }
  }

  static Op op_for(Tok level) {
    switch (level) {
      case Tok::ChOr: return Op::ChOr;
      case Tok::ChAnd: return Op::ChAnd;
      case Tok::Or: return Op::Or;
      default: return Op::And;
    }
  }

  Formula unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Not: return Formula::neg(unary());
      case Tok::Atom: return Formula::atom(t.text);
      case Tok::One: return Formula::top();
      case Tok::Zero: return Formula::bot();
      case Tok::LParen: {
        Formula inner = implication();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')'");
        next();
        return inner;
      }
      case Tok::End: throw ParseError(t.pos, "unexpected end of input");
      default: throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace cl1
