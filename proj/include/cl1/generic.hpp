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
#include <vector>

#include "cl1/classical.hpp"
#include "cl1/formula.hpp"
#include "cl1/game.hpp"

namespace cl1 {

// Compositional game semantics: legality and winners computed clause by
// clause from the connectives (label reversal under ¬, projection onto "i."
// prefixes under ∧/∨/→, initial-choice inspection under ⊓/⊔). Shares no code
// with the prefixation route in game.hpp.

// Is the position legal in f? ♠ is never legal.
bool structurally_legal(const Formula& f, const Run& position);

// Last move of the shortest illegal prefix, if any.
std::optional<Illegality> structural_illegality(const Formula& f, const Run& run);

// Winner of run under v. Illegal runs go to the first offender's adversary.
Player wn_generic(const Formula& f, const Run& run, const Valuation& v);

inline constexpr std::size_t kDefaultStaticBound = 6;

// Every legal run of f, shortest first in DFS order (includes the empty run).
std::vector<Run> enumerate_legal_runs(const Formula& f);

// Exhaustive check that winners survive delays: for each legal run and each
// reordering of it that is a delay for the run's winner, the winner is the
// same. Throws std::length_error when f has more than `bound` choice
// components.
bool check_static(const Formula& f, const Valuation& v, std::size_t bound = kDefaultStaticBound);

// Same legal runs and same winners on every legal run and on every one-move
// illegal extension of one. An empty valuation set means all valuations of
// the atoms of f and g.
bool game_equal(const Formula& f, const Formula& g, const std::vector<Valuation>& valuations = {},
                std::size_t bound = kDefaultStaticBound);

}  // namespace cl1
