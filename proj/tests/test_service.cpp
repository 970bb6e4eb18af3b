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

#include <doctest.h>
#include <httplib.h>

#include <thread>

#include "cl1/http.hpp"
#include "cl1/json_io.hpp"
#include "cl1/parse.hpp"
#include "cl1/session.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

using namespace cl1;
using cl1::testing::FormulaGen;

namespace {

Formula P(const char* s) { return parse_formula(s); }

std::vector<std::string> moves_of(const Json& state) {
  std::vector<std::string> out;
  for (const Json& m : state["legal_human_moves"]) out.push_back(m["move"]);
  return out;
}

}  // namespace

TEST_CASE("proof JSON round trip") {
  FormulaGen gen(51);
  for (int i = 0; i < 200; ++i) {
    const Formula f = gen.next();
    for (System sys : {System::CL1, System::CL1Prime}) {
      const auto p = prove(f, sys);
      if (!p) continue;
      const Json j = proof_to_json(*p);
      const Proof back = proof_from_json(Json::parse(j.dump()));
      CHECK(back.system == sys);
      REQUIRE(back.steps.size() == p->steps.size());
      for (std::size_t k = 0; k < back.steps.size(); ++k) {
        CHECK(back.steps[k].formula == p->steps[k].formula);
        CHECK(back.steps[k].justification == p->steps[k].justification);
      }
      CHECK(proof_to_json(back) == j);
    }
  }
}

TEST_CASE("proof JSON rejects malformed input") {
  CHECK_THROWS_AS(proof_from_json(Json::parse(R"({"steps":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(proof_from_json(Json::parse(R"({"system":"X","steps":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(proof_from_json(Json::parse(R"({"system":"CL1","steps":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(proof_from_json(Json::parse(R"({"system":"CL1","steps":[{"formula":"p &","rule":"A","premises":[]}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      proof_from_json(Json::parse(R"({"system":"CL1","steps":[{"formula":"p","rule":"B","premise":0,"spec":"1.","component":1}]})")),
      std::invalid_argument);
}

TEST_CASE("run and interpretation JSON") {
  const Run r = parse_run("B1.1,T2.1.2,TS");
  const Json j = run_to_json(r);
  CHECK(j[0] == Json{{"by", "B"}, {"move", "1.1"}});
  CHECK(j[2]["move"] == "S");
  CHECK(run_from_json(j) == r);
  CHECK_THROWS_AS(run_from_json(Json::parse(R"([{"by":"Q","move":"1"}])")), std::invalid_argument);

  const Json itp = Json::parse(R"({"p":{"const":true},"q":{"table":{"3":true},"default":false}})");
  const Interpretation i = interpretation_from_json(itp);
  CHECK(valuation_at(i, Input::indexed(3)) == Valuation{{"p", true}, {"q", true}});
  CHECK(valuation_at(i, Input::indexed(2)) == Valuation{{"p", true}, {"q", false}});
  CHECK(interpretation_to_json(i) == itp);
  CHECK_THROWS_AS(interpretation_from_json(Json::parse(R"({"p":{}})")), std::invalid_argument);

  CHECK(valuation_at(interpretation_from_shorthand("a=1,b=0"), {}) == Valuation{{"a", true}, {"b", false}});
  CHECK(interpretation_from_shorthand("").empty());
  CHECK_THROWS(interpretation_from_shorthand("a=2"));
  CHECK_THROWS(interpretation_from_shorthand("a"));
}

TEST_CASE("policy families from JSON") {
  const Formula f = P(testing::kParallelConsequent);
  auto agents = agents_from_json(Json::parse(R"([["1.1"], [], {"random": 3, "budget": 2}])"), f);
  REQUIRE(agents.size() == 3);
  CHECK(agents[0]->act({}, Player::Top).move->text() == "1.1");
  CHECK(agents[1]->act({}, Player::Top).kind == Action::Kind::Done);
  CHECK_THROWS(agents_from_json(Json::parse(R"({"a":1})"), f));
}

TEST_CASE("session: human environment against the machine strategy") {
  SessionManager mgr;
  const ApiResponse c = mgr.create({{"formula", testing::kChoiceConsequent}, {"human_role", "B"}});
  REQUIRE(c.status == 201);
  const std::string id = c.body["id"];
  const Json& st = c.body["state"];
  CHECK(st["strategy"] == "CL1");
  CHECK(moves_of(st) == std::vector<std::string>{"2.2.1", "2.2.2"});
  CHECK(st["legal_human_moves"][0]["preview"] == "(p -> q) * (p -> r) -> p -> q");
  CHECK(st["legal_human_moves"][0]["spec"] == "2.2.");
  CHECK(st["legal_human_moves"][0]["component"] == 1);
  CHECK_FALSE(st["finished"].get<bool>());

  const ApiResponse bad = mgr.move(id, {{"move", "1.1"}});
  CHECK(bad.status == 400);
  CHECK(bad.body["legal_moves"] == Json::array({"2.2.1", "2.2.2"}));

  const ApiResponse m = mgr.move(id, {{"move", "2.2.1"}});
  REQUIRE(m.status == 200);
  CHECK(format_run(run_from_json(m.body["run"])) == "B2.2.1,T1.1");
  CHECK(m.body["formula_now"] == "(p -> q) -> p -> q");
  CHECK(m.body["finished"] == true);
  CHECK(m.body["winner"] == "T");

  CHECK(mgr.get(id).body == m.body);
  CHECK(mgr.remove(id).status == 200);
  CHECK(mgr.get(id).status == 404);
  CHECK(mgr.remove(id).status == 404);
}

TEST_CASE("session: machine holds the environment side on unprovable formulas") {
  SessionManager mgr;
  const ApiResponse c = mgr.create({{"formula", "p + ~p"}, {"human_role", "T"}});
  REQUIRE(c.status == 201);
  CHECK(c.body["state"]["strategy"] == "CL1p");
  const std::string id = c.body["id"];
  const ApiResponse m = mgr.move(id, {{"move", "1"}});
  REQUIRE(m.status == 200);
  CHECK(m.body["finished"] == true);
  CHECK(m.body["winner"].is_null());
  CHECK(m.body["valuation_needed"] == Json::array({"p"}));
  const ApiResponse v = mgr.set_interpretation(id, {{"valuation", {{"p", false}}}});
  CHECK(v.body["winner"] == "B");
  const ApiResponse w = mgr.set_interpretation(id, {{"itp", {{"p", {{"const", true}}}}}});
  CHECK(w.body["winner"] == "T");
}

TEST_CASE("session: no strategy available and free play") {
  SessionManager mgr;
  const ApiResponse a = mgr.create({{"formula", "p + ~p"}, {"human_role", "B"}});
  CHECK(a.body["state"]["strategy"] == "none");
  CHECK(a.body["state"]["legal_human_moves"].empty());
  CHECK(a.body["state"]["finished"] == true);
  CHECK(a.body["state"]["winner"] == "B");

  const ApiResponse b = mgr.create({{"formula", testing::kChoiceConsequent}, {"human_role", "B"}, {"free_play", true}});
  CHECK(b.body["state"]["strategy"] == "none");
  const ApiResponse m = mgr.move(b.body["id"], {{"move", "2.2.1"}});
  CHECK(format_run(run_from_json(m.body["run"])) == "B2.2.1");
  CHECK(m.body["finished"] == true);
  CHECK(m.body["valuation_needed"] == Json::array({"p", "q"}));

  const ApiResponse c = mgr.create({{"formula", "(p * q) & (r * s)"}, {"human_role", "B"}});
  const std::string id = c.body["id"];
  CHECK(mgr.move(id, {{"move", "1.1"}}).body["finished"] == false);
  const ApiResponse s = mgr.stop(id);
  CHECK(s.body["finished"] == true);
  CHECK(s.body["valuation_needed"] == Json::array({"p"}));
  const ApiResponse after = mgr.move(id, {{"move", "2.1"}});
  CHECK(after.status == 400);
  CHECK(mgr.get(id).body == s.body);
}

TEST_CASE("session: request validation") {
  SessionManager mgr;
  CHECK(mgr.create(Json::object()).status == 400);
  const ApiResponse pe = mgr.create({{"formula", "p & )"}});
  CHECK(pe.status == 400);
  CHECK(pe.body["position"] == 4);
  CHECK(mgr.create({{"formula", "p"}, {"human_role", "X"}}).status == 400);
  CHECK(mgr.create({{"formula", "p"}, {"itp", {{"p", 3}}}}).status == 400);
  CHECK(mgr.size() == 0);
  CHECK(mgr.move("nope", {{"move", "1"}}).status == 404);
  CHECK(mgr.stop("nope").status == 404);
  CHECK(mgr.set_interpretation("nope", Json::object()).status == 404);
  const std::string id = mgr.create({{"formula", "p"}}).body["id"];
  CHECK(mgr.move(id, Json::object()).status == 400);
  CHECK(mgr.set_interpretation(id, Json::object()).status == 400);
}

TEST_CASE("property: sessions replay and never change on 4xx") {
  const testing::Corpus c = testing::build_corpus(20, 99);
  std::mt19937_64 rng(52);
  SessionManager mgr;
  std::vector<Formula> all = c.provable;
  all.insert(all.end(), c.unprovable.begin(), c.unprovable.end());
  for (const Formula& f : all) {
    for (const char* role : {"T", "B"}) {
      const ApiResponse cr = mgr.create({{"formula", to_string(f)}, {"human_role", role}});
      REQUIRE(cr.status == 201);
      const std::string id = cr.body["id"];
      Json state = cr.body["state"];
      for (int step = 0; step < 8; ++step) {
        const Run run = run_from_json(state["run"]);
        const RunStatus st = run_status(f, run);
        REQUIRE(st.legal());
        CHECK(to_string(st.position) == state["formula_now"]);
        if (state["finished"].get<bool>()) {
          if (state["winner"].is_null()) {
            CHECK_FALSE(state["valuation_needed"].empty());
          } else {
            for (const Valuation& v : all_valuations(f.atoms())) {
              CHECK(state["winner"] == std::string(1, to_char(winner(f, run, v))));
            }
          }
          break;
        }
        const auto moves = moves_of(state);
        if (rng() % 3 == 0 || moves.empty()) {
          const ApiResponse bad = mgr.move(id, {{"move", rng() % 2 == 0 ? "S" : "9.9"}});
          CHECK(bad.status == 400);
          CHECK(mgr.get(id).body == state);
          continue;
        }
        const ApiResponse ok = mgr.move(id, {{"move", moves[rng() % moves.size()]}});
        REQUIRE(ok.status == 200);
        state = ok.body;
      }
    }
  }
}

TEST_CASE("HTTP round trip") {
  SessionManager mgr;
  HttpService http(mgr);
  const int port = http.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread server([&] { http.run(); });

  httplib::Client cli("127.0.0.1", port);
  auto created = cli.Post("/session", Json{{"formula", testing::kChoiceConsequent}, {"human_role", "B"}}.dump(),
                          "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
  const Json body = Json::parse(created->body);
  const std::string id = body["id"];

  auto got = cli.Get("/session/" + id);
  REQUIRE(got);
  CHECK(got->status == 200);
  CHECK(Json::parse(got->body)["formula_now"] == to_string(P(testing::kChoiceConsequent)));

  auto bad = cli.Post("/session/" + id + "/move", R"({"move":"1.1"})", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(Json::parse(bad->body).contains("legal_moves"));

  auto junk = cli.Post("/session/" + id + "/move", "{not json", "application/json");
  REQUIRE(junk);
  CHECK(junk->status == 400);

  auto moved = cli.Post("/session/" + id + "/move", R"({"move":"2.2.1"})", "application/json");
  REQUIRE(moved);
  CHECK(moved->status == 200);
  CHECK(Json::parse(moved->body)["winner"] == "T");

  auto itp = cli.Post("/session/" + id + "/itp", R"({"valuation":{"p":true,"q":false}})", "application/json");
  REQUIRE(itp);
  CHECK(itp->status == 200);

  auto stopped = cli.Post("/session/" + id + "/stop");
  REQUIRE(stopped);
  CHECK(stopped->status == 200);

  auto opts = cli.Options("/session");
  REQUIRE(opts);
  CHECK(opts->status == 204);

  auto del = cli.Delete("/session/" + id);
  REQUIRE(del);
  CHECK(del->status == 200);
  auto gone = cli.Get("/session/" + id);
  REQUIRE(gone);
  CHECK(gone->status == 404);

  http.stop();
  server.join();
}
