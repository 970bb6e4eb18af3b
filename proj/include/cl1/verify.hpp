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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cl1/agent.hpp"
#include "cl1/classical.hpp"
#include "cl1/formula.hpp"
#include "cl1/game.hpp"
#include "cl1/match.hpp"
#include "cl1/proof.hpp"

namespace cl1 {

// Valuation (alphabetical atoms, false first) under which the
// elementarization of L is false. Throws std::invalid_argument if L is stable.
Valuation falsifying_valuation(const Formula& limit);

struct Branch {
  Run run;
  Formula limit;  // the policy's record when the branch ends
  bool opponent_illegal = false;
};

struct StrategyReport {
  System system = System::CL1;
  bool passed = true;
  std::vector<Branch> branches;
  // Distinct limits of branches where the adversary stopped legally, in
  // discovery order, with the falsifying model for counter-strategies.
  std::vector<Formula> limits;
  std::vector<Valuation> models;
  std::size_t nodes = 0;
  std::vector<std::string> failures;

  std::size_t stopped_branches() const;
  std::size_t illegal_branches() const;
};

// Explores every behaviour of the adversary against the policy extracted
// from p: at each waiting state it may stop, pick any component it owns, or
// make one representative illegal move. Checks at every node that the run
// is legal and brings f down to the policy's current proof formula, and at
// every leaf that the policy's side wins (all valuations of f's atoms when
// there are at most `explicit_atoms` of them).
StrategyReport verify_winning(const Formula& f, const Proof& p, std::size_t explicit_atoms = 4);

// Mirror image for a CL1' proof: every leaf must end at an instable limit or
// in machine illegality, and the environment must win under the limit's
// falsifying valuation.
StrategyReport verify_counter(const Formula& f, const Proof& p, std::size_t explicit_atoms = 4);

struct DiagonalEntry {
  std::size_t index = 0;
  Run run;
  Formula limit;  // L_c: the environment policy's final record
  bool quiesced = false;
  bool machine_illegal = false;
  Player verdict = Player::Bot;
};

struct DiagonalReport {
  std::vector<DiagonalEntry> entries;
  // Distinct limits G_i with their falsifying models M_i.
  std::vector<Formula> instable_limits;
  std::vector<Valuation> models;
  Interpretation interpretation;
  std::vector<std::string> problems;

  bool all_lost() const;
};

// Policy c plays f against the environment strategy of p on input <c>; the
// interpretation makes atom a true at <c> iff a is true in the model of the
// limit that policy c reached.
DiagonalReport diagonal_interpretation(const Formula& f,
                                       std::vector<std::unique_ptr<Agent>>& policies,
                                       const Proof& p, std::size_t step_cap = kDefaultStepCap);

}  // namespace cl1
