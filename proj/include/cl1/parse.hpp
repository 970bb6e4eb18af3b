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
#include <stdexcept>
#include <string>
#include <string_view>

#include "cl1/formula.hpp"

namespace cl1 {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}

  // Byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar, loosest binding first:
//   formula := imp
//   imp     := chor ("->" imp)?
//   chor    := chand ("+" chand)*
//   chand   := por ("*" por)*
//   por     := pand ("|" pand)*
//   pand    := neg ("&" neg)*
//   neg     := "~" neg | atom | "1" | "0" | "(" formula ")"
//   atom    := [a-z][a-z0-9_]*
// A chain of two or more operands at one level becomes a single n-ary node.
// The Unicode symbols ¬ ∧ ∨ → ⊓ ⊔ ⊤ ⊥ are accepted as synonyms.
Formula parse_formula(std::string_view text);

}  // namespace cl1
