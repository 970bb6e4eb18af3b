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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cl1/formula.hpp"

namespace cl1 {

enum class Polarity { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

// A surface occurrence of a ⊓/⊔ subformula, addressed by the child indices
// leading to it. Negations contribute no index; an implication's antecedent
// is child 1 and flips polarity like a negation.
struct ChoiceSpec {
  std::vector<std::size_t> path;
  Polarity polarity = Polarity::Positive;
  Op kind = Op::ChOr;
  std::size_t arity = 0;

  // Dotted address with a trailing dot, e.g. "3.2.2."; empty for the root.
  std::string string_form() const;
  // The move that picks component i of this occurrence, e.g. "2.1." + "2".
  std::string move_for(std::size_t component) const;

  friend bool operator==(const ChoiceSpec&, const ChoiceSpec&) = default;
};

// All surface ⊓/⊔ occurrences in preorder.
std::vector<ChoiceSpec> surface_choice_occurrences(const Formula& f);

// Looks up the surface occurrence whose string_form is `dotted`.
std::optional<ChoiceSpec> find_occurrence(const Formula& f, std::string_view dotted);

// The occurrence's subformula itself.
const Formula& occurrence_at(const Formula& f, const ChoiceSpec& s);

// f with the occurrence at s replaced by its component-th child (1-based).
// Throws std::invalid_argument if s does not address a surface choice node of
// f, std::out_of_range if the component is out of range.
Formula substitute_at(const Formula& f, const ChoiceSpec& s, std::size_t component);

}  // namespace cl1
