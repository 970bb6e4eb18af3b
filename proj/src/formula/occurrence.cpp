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

#include "cl1/occurrence.hpp"

#include <stdexcept>
#include <utility>

namespace cl1 {

std::string ChoiceSpec::string_form() const {
  std::string out;
  for (std::size_t i : path) {
    out += std::to_string(i);
    out += '.';
  }
  return out;
}

std::string ChoiceSpec::move_for(std::size_t component) const {
  return string_form() + std::to_string(component);
}

namespace {

void collect(const Formula& f, std::vector<std::size_t>& path, Polarity pol,
             std::vector<ChoiceSpec>& out) {
  switch (f.op()) {
    case Op::ChAnd:
    case Op::ChOr:
      out.push_back({path, pol, f.op(), f.arity()});
      return;
    case Op::Neg:
      collect(f.child(1), path, flip(pol), out);
      return;
    case Op::Imp:
    case Op::And:
    case Op::Or:
      for (std::size_t i = 1; i <= f.arity(); ++i) {
        path.push_back(i);
        const bool antecedent = f.op() == Op::Imp && i == 1;
        collect(f.child(i), path, antecedent ? flip(pol) : pol, out);
        path.pop_back();
      }
      return;
    default:
      return;
  }
}

// Follows s.path through f, stepping over negations. Returns nullptr when the
// path leaves the tree or passes through a choice node.
const Formula* locate(const Formula& f, const std::vector<std::size_t>& path) {
  const Formula* at = &f;
  std::size_t k = 0;
  while (true) {
    if (at->op() == Op::Neg) {
      at = &at->child(1);
      continue;
    }
    if (k == path.size()) return is_choice(at->op()) ? at : nullptr;
    if (is_choice(at->op()) || at->arity() == 0) return nullptr;
    const std::size_t i = path[k++];
    if (i < 1 || i > at->arity()) return nullptr;
    at = &at->child(i);
  }
}

Formula rebuild(const Formula& f, const std::vector<std::size_t>& path, std::size_t k,
                std::size_t component) {
  if (f.op() == Op::Neg) return Formula::neg(rebuild(f.child(1), path, k, component));
  if (k == path.size()) return f.child(component);
  std::vector<Formula> kids = f.children();
  const std::size_t i = path[k];
  kids[i - 1] = rebuild(kids[i - 1], path, k + 1, component);
  if (f.op() == Op::Imp) return Formula::imp(std::move(kids[0]), std::move(kids[1]));
  return Formula::nary(f.op(), std::move(kids));
}

}  // namespace

std::vector<ChoiceSpec> surface_choice_occurrences(const Formula& f) {
  std::vector<ChoiceSpec> out;
  std::vector<std::size_t> path;
  collect(f, path, Polarity::Positive, out);
  return out;
}

std::optional<ChoiceSpec> find_occurrence(const Formula& f, std::string_view dotted) {
  for (ChoiceSpec& s : surface_choice_occurrences(f)) {
    if (s.string_form() == dotted) return std::move(s);
  }
  return std::nullopt;
}

const Formula& occurrence_at(const Formula& f, const ChoiceSpec& s) {
  const Formula* node = locate(f, s.path);
  if (node == nullptr || node->op() != s.kind) throw std::invalid_argument("'" + s.string_form() + "' is not a surface choice occurrence");
  return *node;
}

Formula substitute_at(const Formula& f, const ChoiceSpec& s, std::size_t component) {
  const Formula& node = occurrence_at(f, s);
  if (component < 1 || component > node.arity()) {
    throw std::out_of_range("component " + std::to_string(component) + " out of range 1.." +
                            std::to_string(node.arity()));
  }
  return rebuild(f, s.path, 0, component);
}

}  // namespace cl1
