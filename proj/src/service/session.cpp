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

#include "cl1/session.hpp"

#include <set>
#include <stdexcept>

#include "cl1/classical.hpp"
#include "cl1/parse.hpp"
#include "cl1/proof.hpp"

namespace cl1 {
namespace {

ApiResponse error(int status, const std::string& what, Json extra = Json::object()) {
  extra["error"] = what;
  return {status, std::move(extra)};
}

ApiResponse not_found(const std::string& id) { return error(404, "unknown session '" + id + "'"); }

Json move_list(const Formula& position, Player p) {
  Json out = Json::array();
  for (const LegalMove& m : legal_move_details(position, p)) {
    out.push_back({{"move", m.move.text()},
                   {"spec", m.spec.string_form()},
                   {"component", m.component},
                   {"preview", to_string(m.result)},
                   {"preview_unicode", to_unicode(m.result)}});
  }
  return out;
}

// Lets the computer answer until its strategy is waiting again.
void machine_respond(Session& s) {
  if (!s.machine) return;
  while (true) {
    const Action a = s.machine->act(s.run, s.computer_role());
    if (a.kind != Action::Kind::Move) return;
    const LabeledMove lm{s.computer_role(), *a.move};
    auto next = apply_move(s.position, lm);
    if (!next) throw std::logic_error("extracted strategy made an illegal move");
    s.run.push_back(lm);
    s.position = std::move(*next);
  }
}

bool finished(const Session& s) {
  const bool machine_idle = !s.machine || s.machine->phase() != ProofPolicy::Phase::Moving;
  return machine_idle && (s.human_stopped || legal_moves(s.position, s.human_role).empty());
}

}  // namespace

Json session_state(const Session& s) {
  std::string strategy = "none";
  if (s.machine) strategy = s.machine->proof().system == System::CL1 ? "CL1" : "CL1p";
  Json out{{"id", s.id},
           {"formula", to_string(s.formula)},
           {"formula_now", to_string(s.position)},
           {"formula_now_unicode", to_unicode(s.position)},
           {"human_role", std::string(1, to_char(s.human_role))},
           {"machine_role", std::string(1, to_char(s.computer_role()))},
           {"strategy", strategy},
           {"run", run_to_json(s.run)},
           {"legal_human_moves", move_list(s.position, s.human_role)},
           {"machine_moves", move_list(s.position, s.computer_role())},
           {"finished", finished(s)},
           {"winner", nullptr},
           {"valuation_needed", Json::array()}};
  if (s.itp) out["itp"] = interpretation_to_json(*s.itp);
  if (!finished(s)) return out;

  const Formula e = elementarize(s.position);
  std::set<std::string> missing = e.atoms();
  if (s.itp) {
    for (const auto& [atom, pred] : *s.itp) missing.erase(atom);
  }
  if (missing.empty()) {
    out["winner"] = std::string(1, to_char(winner(s.formula, s.run, valuation_at(s.itp.value_or(Interpretation{}), s.input))));
  } else if (is_tautology(e)) {
    out["winner"] = "T";
  } else if (is_tautology(Formula::neg(e))) {
    out["winner"] = "B";
  } else {
    out["valuation_needed"] = missing;
  }
  return out;
}

std::shared_ptr<Session> SessionManager::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

ApiResponse SessionManager::create(const Json& body) {
  if (!body.is_object() || !body.contains("formula") || !body["formula"].is_string()) {
    return error(400, "body needs a \"formula\" string");
  }
  Formula f = Formula::top();
  try {
    f = parse_formula(body["formula"].get<std::string>());
  } catch (const ParseError& e) {
    return error(400, e.what(), {{"position", e.position()}});
  }
  Player human = Player::Bot;
  try {
    const std::string role = body.value("human_role", std::string("B"));
    if (role.size() != 1) throw std::invalid_argument("human_role must be \"T\" or \"B\"");
    human = player_from_char(role[0]);
  } catch (const std::exception& e) {
    return error(400, e.what());
  }
  std::optional<Interpretation> itp;
  Input input;
  try {
    if (body.contains("itp") && !body["itp"].is_null()) itp = interpretation_from_json(body["itp"]);
    if (body.contains("input")) input = Input(body["input"].get<std::vector<std::uint64_t>>());
  } catch (const std::exception& e) {
    return error(400, e.what());
  }
  if (f.choice_nodes() > 24 || f.atoms().size() > kMaxTruthTableAtoms) {
    return error(400, "formula too large for interactive play");
  }

  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(mu_);
    s = std::make_shared<Session>("s" + std::to_string(next_id_++), f, human);
  }
  s->itp = std::move(itp);
  s->input = std::move(input);
  if (!body.value("free_play", false)) {
    const System sys = s->computer_role() == Player::Top ? System::CL1 : System::CL1Prime;
    if (auto proof = prove(f, sys)) s->machine.emplace(std::move(*proof));
  }
  machine_respond(*s);
  Json state = session_state(*s);
  {
    std::lock_guard lock(mu_);
    sessions_.emplace(s->id, s);
  }
  return {201, {{"id", s->id}, {"state", std::move(state)}}};
}

ApiResponse SessionManager::get(const std::string& id) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard lock(s->mu);
  return {200, session_state(*s)};
}

ApiResponse SessionManager::move(const std::string& id, const Json& body) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard lock(s->mu);
  if (!body.is_object() || !body.contains("move") || !body["move"].is_string()) {
    return error(400, "body needs a \"move\" string");
  }
  const Move m = Move::parse(body["move"].get<std::string>());
  Json legal = Json::array();
  for (const Move& lm : legal_moves(s->position, s->human_role)) legal.push_back(lm.text());
  if (s->human_stopped) return error(400, "session is finished", {{"legal_moves", Json::array()}});
  auto next = apply_move(s->position, {s->human_role, m});
  if (!next) return error(400, "illegal move '" + m.text() + "'", {{"legal_moves", std::move(legal)}});

  s->run.push_back({s->human_role, m});
  s->position = std::move(*next);
  machine_respond(*s);
  return {200, session_state(*s)};
}

ApiResponse SessionManager::stop(const std::string& id) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard lock(s->mu);
  s->human_stopped = true;
  return {200, session_state(*s)};
}

ApiResponse SessionManager::set_interpretation(const std::string& id, const Json& body) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard lock(s->mu);
  try {
    if (body.contains("itp")) {
      s->itp = interpretation_from_json(body["itp"]);
    } else if (body.contains("valuation")) {
      s->itp = constant_interpretation(body["valuation"].get<Valuation>());
    } else {
      return error(400, "body needs \"itp\" or \"valuation\"");
    }
  } catch (const std::exception& e) {
    return error(400, e.what());
  }
  return {200, session_state(*s)};
}

ApiResponse SessionManager::remove(const std::string& id) {
  std::lock_guard lock(mu_);
  if (sessions_.erase(id) == 0) return not_found(id);
  return {200, {{"deleted", id}}};
}

}  // namespace cl1
