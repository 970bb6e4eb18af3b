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

#include <memory>
#include <vector>

#include <json.hpp>

#include "cl1/agent.hpp"
#include "cl1/game.hpp"
#include "cl1/match.hpp"
#include "cl1/proof.hpp"
#include "cl1/verify.hpp"

namespace cl1 {

using Json = nlohmann::json;

// {"system":"CL1"|"CL1p","steps":[{"formula":..,"rule":"A","premises":[..]}
//  | {"formula":..,"rule":"B","premise":i,"spec":"1.","component":k}]}
Json proof_to_json(const Proof& p);
// Throws std::invalid_argument on malformed documents.
Proof proof_from_json(const Json& j);

// [{"by":"T","move":"2.1.2"}, ...]
Json run_to_json(const Run& run);
Run run_from_json(const Json& j);

// {"p":{"const":true}} or {"p":{"table":{"3":true},"default":false}}
Json interpretation_to_json(const Interpretation& itp);
Interpretation interpretation_from_json(const Json& j);
// "a=1,b=0" shorthand for constant predicates.
Interpretation interpretation_from_shorthand(std::string_view text);

Json valuation_to_json(const Valuation& v);

// {"run":[..],"limit":"..","winner":"T"|"B","steps":N}
Json match_to_json(const MatchRecord& m);

// {"limits":{"c":".."},"interpretation":{..},"verdicts":{"c":"B"}}
Json diagonal_to_json(const DiagonalReport& r);

// A list whose entries are either move lists (scripted agents) or
// {"random":seed,"budget":n} objects. Random agents play on `game`.
std::vector<std::unique_ptr<Agent>> agents_from_json(const Json& j, const Formula& game);

}  // namespace cl1
