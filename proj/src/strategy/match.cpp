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

#include "cl1/match.hpp"

#include <stdexcept>

namespace cl1 {
namespace {

const char* describe(Action::Kind k) {
  switch (k) {
    case Action::Kind::Move: return "moves";
    case Action::Kind::Pass: return "passes";
    default: return "done";
  }
}

}  // namespace

MatchRecord play_match(const Formula& game, Agent& machine, Agent& env, Player pacer,
                       std::size_t step_cap) {
  if (step_cap == 0) throw std::invalid_argument("step_cap must be positive");
  Agent& lead = pacer == Player::Top ? machine : env;
  Agent& other = pacer == Player::Top ? env : machine;
  const Player other_role = adversary(pacer);

  MatchRecord rec;
  while (rec.steps < step_cap) {
    ++rec.steps;
    std::string line = std::to_string(rec.steps) + ": " + to_char(pacer) + " ";
    const Action a = lead.act(rec.run, pacer);
    line += describe(a.kind);
    if (a.kind == Action::Kind::Move) {
      line += " " + a.move->text();
      rec.run.push_back({pacer, *a.move});
      rec.transcript.push_back(std::move(line));
      continue;
    }
    const Action b = other.act(rec.run, other_role);
    line += std::string("; ") + to_char(other_role) + " " + describe(b.kind);
    if (b.kind == Action::Kind::Move) {
      line += " " + b.move->text();
      rec.run.push_back({other_role, *b.move});
    }
    rec.transcript.push_back(std::move(line));
    if (a.kind == Action::Kind::Done && b.kind == Action::Kind::Done) {
      rec.quiesced = true;
      break;
    }
  }
  const RunStatus st = run_status(game, rec.run);
  if (st.legal()) rec.limit = st.position;
  return rec;
}

MatchRecord run_match(const Formula& game, Agent& machine, Agent& env, Player pacer,
                      const Interpretation& itp, const Input& e, std::size_t step_cap) {
  MatchRecord rec = play_match(game, machine, env, pacer, step_cap);
  rec.winner = winner(game, rec.run, itp, e);
  return rec;
}

}  // namespace cl1
