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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "cl1/formula.hpp"
#include "cl1/game.hpp"
#include "cl1/json_io.hpp"
#include "cl1/policy.hpp"

namespace cl1 {

struct ApiResponse {
  int status = 200;
  Json body;
};

// A live game between a human and the strategy extracted for the other
// side. The computer plays the CL1 machine strategy when it holds ⊤ and the
// formula is CL1-provable, the CL1' environment strategy when it holds ⊥
// and the formula is CL1-unprovable, and otherwise makes no moves.
struct Session {
  std::string id;
  Formula formula;
  Player human_role = Player::Bot;
  Formula position;
  Run run;
  std::optional<ProofPolicy> machine;
  std::optional<Interpretation> itp;
  Input input;
  bool human_stopped = false;
  std::mutex mu;

  Session(std::string session_id, Formula f, Player human)
      : id(std::move(session_id)), formula(f), human_role(human), position(std::move(f)) {}

  Player computer_role() const { return adversary(human_role); }
};

// Request handling behind the serve command; transport-free so it can be
// driven directly. Every handler leaves the session untouched when it
// answers 4xx.
class SessionManager {
 public:
  // {"formula": "...", "human_role": "T"|"B", "itp"?: {...}, "input"?: [..],
  //  "free_play"?: bool}
  ApiResponse create(const Json& body);
  ApiResponse get(const std::string& id);
  // {"move": "2.2.1"}
  ApiResponse move(const std::string& id, const Json& body);
  // The human declares they will make no further moves.
  ApiResponse stop(const std::string& id);
  // {"itp": {...}} or {"valuation": {"p": true, ...}}
  ApiResponse set_interpretation(const std::string& id, const Json& body);
  ApiResponse remove(const std::string& id);

  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id) const;

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;
};

// Snapshot of a session as returned by the API.
Json session_state(const Session& s);

}  // namespace cl1
