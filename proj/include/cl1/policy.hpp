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
#include <deque>
#include <memory>
#include <optional>
#include <unordered_map>

#include "cl1/agent.hpp"
#include "cl1/game.hpp"
#include "cl1/proof.hpp"

namespace cl1 {

// Strategy read off a proof. The record E starts at the goal; a rule (b)
// step is played as its move, a rule (a) step waits for the adversary to
// pick one of the premises. A CL1 proof yields a machine (⊤) strategy, a
// CL1' proof the mirrored environment (⊥) strategy.
class ProofPolicy : public Agent {
 public:
  enum class Phase {
    Moving,           // E is justified by rule (b)
    Waiting,          // E is justified by rule (a) with premises
    Terminal,         // rule (a) without premises: no legal adversary move left
    OpponentIllegal,  // the adversary made a move outside the premise pattern
  };

  // Throws std::invalid_argument if the proof does not check.
  explicit ProofPolicy(Proof proof);

  Player role() const { return role_; }
  Phase phase() const { return phase_; }
  const Proof& proof() const { return *proof_; }
  std::size_t current_step() const { return current_; }
  const Formula& current() const { return proof_->steps[current_].formula; }

  std::optional<Move> pending_move() const;
  // Plays the pending move and advances E to the rule (b) premise.
  Move commit_move();
  // Feeds one adversary move. Moves that arrive while Moving are held back
  // until E reaches a rule (a) step.
  void observe(const Move& m);

  Action act(const Run& run, Player role) override;

 private:
  void settle();

  std::shared_ptr<const Proof> proof_;
  std::shared_ptr<const std::unordered_map<Formula, std::size_t, FormulaHash>> index_;
  Player role_;
  std::size_t current_;
  Phase phase_ = Phase::Waiting;
  std::size_t seen_ = 0;
  std::deque<Move> backlog_;
};

// Throw std::invalid_argument unless the proof checks and is in the right
// system.
ProofPolicy machine_policy(const Proof& p);
ProofPolicy env_policy(const Proof& p);

}  // namespace cl1
