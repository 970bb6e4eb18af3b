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
#include <unordered_map>
#include <variant>
#include <vector>

#include "cl1/formula.hpp"
#include "cl1/occurrence.hpp"

namespace cl1 {

// CL1 proves exactly the valid formulas; CL1' (Prime) proves exactly the
// CL1-unprovable ones. The rules of CL1' are those of CL1 with positive and
// negative occurrences interchanged and stability replaced by instability.
enum class System { CL1, CL1Prime };

std::string to_string(System s);

// Rule (a): the conclusion satisfies the system's stability side condition
// and cites one premise per component of every targeted occurrence.
struct RuleA {
  std::vector<std::size_t> premises;
  friend bool operator==(const RuleA&, const RuleA&) = default;
};

// Rule (b): the premise is the conclusion with one occurrence resolved.
struct RuleB {
  std::size_t premise = 0;
  ChoiceSpec spec;
  std::size_t component = 0;
  friend bool operator==(const RuleB&, const RuleB&) = default;
};

using Justification = std::variant<RuleA, RuleB>;

struct Step {
  Formula formula;
  Justification justification;
};

struct Proof {
  System system = System::CL1;
  std::vector<Step> steps;

  const Formula& goal() const { return steps.back().formula; }
  std::optional<std::size_t> index_of(const Formula& f) const;
};

// Occurrence targeted by rule (a) of the given system: for CL1, positive ⊓
// and negative ⊔; for CL1', negative ⊓ and positive ⊔.
bool targeted_by_rule_a(const ChoiceSpec& s, System sys);

// Stability side condition of rule (a): stable for CL1, instable for CL1'.
bool side_condition(const Formula& f, System sys);

// Premises of rule (a), occurrences left to right, components ascending,
// duplicates dropped. Stability is not checked here.
std::vector<Formula> rule_a_premises(const Formula& f, System sys);

struct RuleBOption {
  ChoiceSpec spec;
  std::size_t component;
  Formula premise;
};

std::vector<RuleBOption> rule_b_options(const Formula& f, System sys);

// Backward search with a per-instance memo table keyed on structural
// equality. Rule (a) is tried first, then rule (b) options in order.
class Prover {
 public:
  explicit Prover(System sys) : system_(sys) {}

  System system() const { return system_; }
  bool provable(const Formula& f);
  std::optional<Proof> prove(const Formula& f);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Entry {
    bool provable = false;
    // Empty: rule (a). Otherwise the index into rule_b_options.
    std::optional<std::size_t> via_b;
  };

  Entry solve(const Formula& f);
  void emit(const Formula& f, Proof& out, std::unordered_map<Formula, std::size_t, FormulaHash>& placed);

  System system_;
  std::unordered_map<Formula, Entry, FormulaHash> memo_;
};

std::optional<Proof> prove(const Formula& f, System sys);

struct ProofCheck {
  bool ok = true;
  std::size_t step = 0;
  std::string reason;

  explicit operator bool() const { return ok; }
};

ProofCheck check_proof(const Proof& p);

// Which system proves f. Throws std::logic_error if neither or both do.
System duality_check(const Formula& f);

}  // namespace cl1
