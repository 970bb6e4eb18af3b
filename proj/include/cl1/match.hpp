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
#include <vector>

#include "cl1/agent.hpp"
#include "cl1/formula.hpp"
#include "cl1/game.hpp"

namespace cl1 {

inline constexpr std::size_t kDefaultStepCap = 1000;

struct MatchRecord {
  Run run;
  // Absent when the run is illegal.
  std::optional<Formula> limit;
  std::optional<Player> winner;
  std::size_t steps = 0;
  bool quiesced = false;
  std::vector<std::string> transcript;
};

// One round: the pacer acts first. A pacer move ends the round; a pacer
// Pass or Done grants permission and the other agent may make at most one
// move. The match stops after a round in which both agents are Done, or
// after step_cap rounds.
MatchRecord play_match(const Formula& game, Agent& machine, Agent& env, Player pacer,
                       std::size_t step_cap = kDefaultStepCap);

// play_match plus the winner under itp at input e.
MatchRecord run_match(const Formula& game, Agent& machine, Agent& env, Player pacer,
                      const Interpretation& itp, const Input& e,
                      std::size_t step_cap = kDefaultStepCap);

}  // namespace cl1
