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

#include "cl1/agent.hpp"

namespace cl1 {

Action ScriptedAgent::act(const Run& /*run*/, Player /*role*/) {
  if (next_ < script_.size()) return Action::make(script_[next_++]);
  return Action::done();
}

Action RandomAgent::act(const Run& run, Player role) {
  if (turns_ >= budget_) return Action::done();
  ++turns_;
  const RunStatus st = run_status(game_, run);
  if (!st.legal()) return Action::done();
  const std::vector<Move> options = legal_moves(st.position, role);
  std::uniform_int_distribution<int> roll(0, 19);
  const int r = roll(rng_);
  if (r < 12 && !options.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    return Action::make(options[pick(rng_)]);
  }
  if (r == 19) return Action::make(Move::spade());
  if (r == 18) return Action::make(Move::choice("9.9"));
  return Action::pass();
}

}  // namespace cl1
