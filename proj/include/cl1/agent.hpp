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
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cl1/formula.hpp"
#include "cl1/game.hpp"

namespace cl1 {

// What an agent does when it is given the floor.
//   Move: one move, appended with the agent's label.
//   Pass: no move this round, may still move later on its own.
//   Done: will not move again unless the run grows with an adversary move.
struct Action {
  enum class Kind { Move, Pass, Done };

  Kind kind = Kind::Done;
  std::optional<cl1::Move> move;

  static Action make(cl1::Move m) { return {Kind::Move, std::move(m)}; }
  static Action pass() { return {Kind::Pass, std::nullopt}; }
  static Action done() { return {Kind::Done, std::nullopt}; }
};

// A player in a match. Agents see the whole run so far (labels from the
// game's point of view) and must be deterministic given their own state.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual Action act(const Run& run, Player role) = 0;
};

// Plays a fixed list of moves, one per turn, then is Done.
class ScriptedAgent : public Agent {
 public:
  explicit ScriptedAgent(std::vector<Move> script) : script_(std::move(script)) {}
  Action act(const Run& run, Player role) override;

 private:
  std::vector<Move> script_;
  std::size_t next_ = 0;
};

// Seeded agent that mostly picks uniformly among its legal moves in the
// current position, sometimes idles, and rarely plays junk. Done after
// `budget` turns or once the run is illegal.
class RandomAgent : public Agent {
 public:
  RandomAgent(Formula game, std::uint64_t seed, std::size_t budget = 8)
      : game_(std::move(game)), rng_(seed), budget_(budget) {}
  Action act(const Run& run, Player role) override;

 private:
  Formula game_;
  std::mt19937_64 rng_;
  std::size_t budget_;
  std::size_t turns_ = 0;
};

}  // namespace cl1
