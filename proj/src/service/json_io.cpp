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

#include "cl1/json_io.hpp"

#include <stdexcept>
#include <string>

#include "cl1/parse.hpp"

namespace cl1 {
namespace {

std::string player_label(Player p) { return std::string(1, to_char(p)); }

Player player_from(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s.size() != 1) throw std::invalid_argument("player must be \"T\" or \"B\"");
  return player_from_char(s[0]);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json proof_to_json(const Proof& p) {
  Json steps = Json::array();
  for (const Step& st : p.steps) {
    Json s{{"formula", to_string(st.formula)}};
    if (const auto* a = std::get_if<RuleA>(&st.justification)) {
      s["rule"] = "A";
      s["premises"] = a->premises;
    } else {
      const auto& b = std::get<RuleB>(st.justification);
      s["rule"] = "B";
      s["premise"] = b.premise;
      s["spec"] = b.spec.string_form();
      s["component"] = b.component;
    }
    steps.push_back(std::move(s));
  }
  return {{"system", p.system == System::CL1 ? "CL1" : "CL1p"}, {"steps", std::move(steps)}};
}

Proof proof_from_json(const Json& j) {
  try {
    Proof p;
    const std::string sys = field(j, "system").get<std::string>();
    if (sys == "CL1") {
      p.system = System::CL1;
    } else if (sys == "CL1p") {
      p.system = System::CL1Prime;
    } else {
      throw std::invalid_argument("unknown system '" + sys + "'");
    }
    for (const Json& s : field(j, "steps")) {
      Formula f = parse_formula(field(s, "formula").get<std::string>());
      const std::string rule = field(s, "rule").get<std::string>();
      if (rule == "A") {
        p.steps.push_back({std::move(f), RuleA{field(s, "premises").get<std::vector<std::size_t>>()}});
      } else if (rule == "B") {
        const std::string spec = field(s, "spec").get<std::string>();
        auto occ = find_occurrence(f, spec);
        if (!occ) throw std::invalid_argument("'" + spec + "' is not a surface choice occurrence of " + to_string(f));
        p.steps.push_back({std::move(f), RuleB{field(s, "premise").get<std::size_t>(), std::move(*occ),
                                               field(s, "component").get<std::size_t>()}});
      } else {
        throw std::invalid_argument("unknown rule '" + rule + "'");
      }
    }
    if (p.steps.empty()) throw std::invalid_argument("proof has no steps");
    return p;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed proof: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed proof: ") + e.what());
  }
}

Json run_to_json(const Run& run) {
  Json out = Json::array();
  for (const LabeledMove& lm : run) out.push_back({{"by", player_label(lm.player)}, {"move", lm.move.text()}});
  return out;
}

Run run_from_json(const Json& j) {
  try {
    Run run;
    for (const Json& m : j) {
      run.push_back({player_from(field(m, "by")), Move::parse(field(m, "move").get<std::string>())});
    }
    return run;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed run: ") + e.what());
  }
}

Json interpretation_to_json(const Interpretation& itp) {
  Json out = Json::object();
  for (const auto& [atom, pred] : itp) {
    if (const auto* c = std::get_if<ConstPredicate>(&pred)) {
      out[atom] = {{"const", c->value}};
    } else {
      const auto& t = std::get<FirstTermTable>(pred);
      Json table = Json::object();
      for (const auto& [k, v] : t.table) table[std::to_string(k)] = v;
      out[atom] = {{"table", std::move(table)}, {"default", t.fallback}};
    }
  }
  return out;
}

Interpretation interpretation_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("interpretation must be an object");
    Interpretation itp;
    for (const auto& [atom, spec] : j.items()) {
      if (spec.contains("const")) {
        itp[atom] = ConstPredicate{spec.at("const").get<bool>()};
      } else if (spec.contains("table")) {
        FirstTermTable t;
        for (const auto& [k, v] : spec.at("table").items()) t.table[std::stoull(k)] = v.get<bool>();
        t.fallback = spec.value("default", false);
        itp[atom] = std::move(t);
      } else {
        throw std::invalid_argument("predicate for '" + atom + "' needs \"const\" or \"table\"");
      }
    }
    return itp;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed interpretation: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed interpretation: ") + e.what());
  }
}

Interpretation interpretation_from_shorthand(std::string_view text) {
  Interpretation itp;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    const std::string_view item = text.substr(i, j - i);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 2 != item.size() ||
        (item[eq + 1] != '0' && item[eq + 1] != '1')) {
      throw std::invalid_argument("expected atom=0 or atom=1, got '" + std::string(item) + "'");
    }
    itp[std::string(item.substr(0, eq))] = ConstPredicate{item[eq + 1] == '1'};
    i = j + 1;
  }
  return itp;
}

Json valuation_to_json(const Valuation& v) {
  Json out = Json::object();
  for (const auto& [atom, value] : v) out[atom] = value;
  return out;
}

Json match_to_json(const MatchRecord& m) {
  Json out{{"run", run_to_json(m.run)}, {"steps", m.steps}, {"quiesced", m.quiesced}};
  out["limit"] = m.limit ? Json(to_string(*m.limit)) : Json(nullptr);
  out["winner"] = m.winner ? Json(player_label(*m.winner)) : Json(nullptr);
  return out;
}

Json diagonal_to_json(const DiagonalReport& r) {
  Json limits = Json::object();
  Json verdicts = Json::object();
  Json runs = Json::object();
  for (const DiagonalEntry& e : r.entries) {
    const std::string c = std::to_string(e.index);
    limits[c] = to_string(e.limit);
    verdicts[c] = player_label(e.verdict);
    runs[c] = run_to_json(e.run);
  }
  Json models = Json::array();
  for (std::size_t i = 0; i < r.instable_limits.size(); ++i) {
    models.push_back({{"limit", to_string(r.instable_limits[i])}, {"model", valuation_to_json(r.models[i])}});
  }
  return {{"limits", std::move(limits)},
          {"interpretation", interpretation_to_json(r.interpretation)},
          {"verdicts", std::move(verdicts)},
          {"runs", std::move(runs)},
          {"models", std::move(models)},
          {"problems", r.problems}};
}

std::vector<std::unique_ptr<Agent>> agents_from_json(const Json& j, const Formula& game) {
  if (!j.is_array()) throw std::invalid_argument("policy family must be a JSON array");
  std::vector<std::unique_ptr<Agent>> out;
  for (const Json& item : j) {
    if (item.is_array()) {
      std::vector<Move> script;
      for (const Json& m : item) script.push_back(Move::parse(m.get<std::string>()));
      out.push_back(std::make_unique<ScriptedAgent>(std::move(script)));
    } else if (item.is_object() && item.contains("random")) {
      out.push_back(std::make_unique<RandomAgent>(game, item.at("random").get<std::uint64_t>(),
                                                  item.value("budget", std::size_t{8})));
    } else {
      throw std::invalid_argument("policy entries must be move lists or {\"random\": seed}");
    }
  }
  return out;
}

}  // namespace cl1
