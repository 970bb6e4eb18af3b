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

#include "cl1/policy.hpp"

#include <stdexcept>
#include <string>

namespace cl1 {

ProofPolicy::ProofPolicy(Proof proof) {
  if (const ProofCheck c = check_proof(proof); !c) {
    throw std::invalid_argument("rejected proof: step " + std::to_string(c.step) + ": " + c.reason);
  }
  role_ = proof.system == System::CL1 ? Player::Top : Player::Bot;
  auto index = std::make_shared<std::unordered_map<Formula, std::size_t, FormulaHash>>();
  for (std::size_t i = 0; i < proof.steps.size(); ++i) index->emplace(proof.steps[i].formula, i);
  current_ = proof.steps.size() - 1;
  proof_ = std::make_shared<const Proof>(std::move(proof));
  index_ = std::move(index);
  settle();
}

void ProofPolicy::settle() {
  if (phase_ == Phase::OpponentIllegal) return;
  const Justification& j = proof_->steps[current_].justification;
  if (std::holds_alternative<RuleB>(j)) {
    phase_ = Phase::Moving;
  } else {
    phase_ = std::get<RuleA>(j).premises.empty() ? Phase::Terminal : Phase::Waiting;
  }
}

std::optional<Move> ProofPolicy::pending_move() const {
  if (phase_ != Phase::Moving) return std::nullopt;
  const auto& b = std::get<RuleB>(proof_->steps[current_].justification);
  return Move::choice(b.spec.move_for(b.component));
}

Move ProofPolicy::commit_move() {
  if (phase_ != Phase::Moving) throw std::logic_error("no move pending");
  const auto& b = std::get<RuleB>(proof_->steps[current_].justification);
  Move m = Move::choice(b.spec.move_for(b.component));
  current_ = b.premise;
  settle();
  while (phase_ != Phase::Moving && !backlog_.empty()) {
    Move next = std::move(backlog_.front());
    backlog_.pop_front();
    observe(next);
  }
  return m;
}

void ProofPolicy::observe(const Move& m) {
  switch (phase_) {
    case Phase::OpponentIllegal:
      return;
    case Phase::Moving:
      backlog_.push_back(m);
      return;
    default:
      break;
  }
  // The move must be β·i with β addressing an occurrence that rule (a)
  // targets in E; anything else is the adversary's loss.
  if (m.kind() == Move::Kind::Choice) {
    const std::string& t = m.text();
    const std::size_t cut = t.rfind('.');
    const std::string prefix = cut == std::string::npos ? std::string() : t.substr(0, cut + 1);
    const std::string digits = cut == std::string::npos ? t : t.substr(cut + 1);
    const auto occ = find_occurrence(current(), prefix);
    if (occ && targeted_by_rule_a(*occ, proof_->system) && !digits.empty() && digits.size() < 10 &&
        digits.front() != '0') {
      const std::size_t i = std::stoul(digits);
      if (i <= occ->arity) {
        const Formula next = substitute_at(current(), *occ, i);
        auto it = index_->find(next);
        if (it == index_->end()) throw std::logic_error("rule (a) premise missing from the proof");
        current_ = it->second;
        settle();
        return;
      }
    }
  }
  phase_ = Phase::OpponentIllegal;
}

Action ProofPolicy::act(const Run& run, Player role) {
  if (role != role_) throw std::invalid_argument("policy asked to play the wrong side");
  // Own-labelled entries are the moves this policy already committed.
  for (; seen_ < run.size(); ++seen_) {
    if (run[seen_].player != role_) observe(run[seen_].move);
  }
  if (phase_ == Phase::Moving) {
    return Action::make(commit_move());
  }
  return Action::done();
}

ProofPolicy machine_policy(const Proof& p) {
  if (p.system != System::CL1) throw std::invalid_argument("machine policy needs a CL1 proof");
  return ProofPolicy(p);
}

ProofPolicy env_policy(const Proof& p) {
  if (p.system != System::CL1Prime) throw std::invalid_argument("environment policy needs a CL1' proof");
  return ProofPolicy(p);
}

}  // namespace cl1
