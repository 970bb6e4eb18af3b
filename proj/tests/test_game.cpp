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

#include <algorithm>
#include <set>

#include "cl1/game.hpp"
#include "cl1/generic.hpp"
#include "cl1/parse.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

using namespace cl1;
using cl1::testing::FormulaGen;

namespace {

Formula P(const char* s) { return parse_formula(s); }

std::set<std::string> move_texts(const Formula& f, Player p) {
  std::set<std::string> out;
  for (const Move& m : legal_moves(f, p)) out.insert(m.text());
  return out;
}

const Valuation kAllTrue{{"a", true}, {"b", true}};

}  // namespace

TEST_CASE("players and moves") {
  CHECK(adversary(adversary(Player::Top)) == Player::Top);
  CHECK(adversary(Player::Top) == Player::Bot);
  CHECK(player_from_char('T') == Player::Top);
  CHECK(to_char(Player::Bot) == 'B');
  CHECK_THROWS(player_from_char('x'));
  CHECK(Move::parse("S").kind() == Move::Kind::Spade);
  CHECK(Move::parse("♠") == Move::spade());
  CHECK(Move::parse("2.1.2").kind() == Move::Kind::Choice);
  CHECK(Move::parse("x").kind() == Move::Kind::Raw);
}

TEST_CASE("run text format") {
  const Run r = parse_run("B1.1,T2.1.2");
  REQUIRE(r.size() == 2);
  CHECK(r[0] == LabeledMove{Player::Bot, Move::parse("1.1")});
  CHECK(format_run(r) == "B1.1,T2.1.2");
  CHECK(parse_run("").empty());
  CHECK(parse_run("TS")[0].move == Move::spade());
  CHECK_THROWS(parse_run("X1"));
}

TEST_CASE("inputs are canonical") {
  CHECK(Input({3, 0, 0}) == Input::indexed(3));
  CHECK(Input({0, 0}) == Input{});
  CHECK(Input::indexed(3).term(5) == 0);
}

TEST_CASE("legal moves") {
  const Formula g = P(testing::kDelayGame);
  CHECK(move_texts(g, Player::Bot) == std::set<std::string>{"1.1", "1.2"});
  CHECK(move_texts(g, Player::Top) == std::set<std::string>{"2.1.1", "2.1.2"});
  CHECK(move_texts(P("p + ~p"), Player::Top) == std::set<std::string>{"1", "2"});
  CHECK(move_texts(P("p + ~p"), Player::Bot).empty());
  CHECK(move_texts(P("p & q"), Player::Top).empty());
  CHECK(move_texts(P("p & q"), Player::Bot).empty());
}

TEST_CASE("apply_move") {
  const Formula g = P("(a+~a)->((~b+b)&1)");
  const auto g2 = apply_move(g, {Player::Top, Move::parse("2.1.2")});
  REQUIRE(g2);
  CHECK(*g2 == P("(a+~a)->(b&1)"));
  const auto g3 = apply_move(*g2, {Player::Bot, Move::parse("1.1")});
  REQUIRE(g3);
  CHECK(*g3 == P("a->(b&1)"));
  CHECK_FALSE(apply_move(P("p + ~p"), {Player::Bot, Move::parse("1")}));
  CHECK_FALSE(apply_move(P("p + ~p"), {Player::Top, Move::parse("3")}));
  CHECK_FALSE(apply_move(P("p + ~p"), {Player::Top, Move::spade()}));
}

TEST_CASE("run_status") {
  const Formula g = P(testing::kDelayGame);
  const RunStatus s = run_status(g, parse_run("B1.1,T2.1.2"));
  CHECK(s.legal());
  CHECK(s.position == P("a->(b&1)"));
  const RunStatus sp = run_status(P("p"), parse_run("TS"));
  REQUIRE(sp.illegal);
  CHECK(*sp.illegal == Illegality{Player::Top, 0});
  const RunStatus twice = run_status(P("p + ~p"), parse_run("T1,T1"));
  REQUIRE(twice.illegal);
  CHECK(*twice.illegal == Illegality{Player::Top, 1});
  CHECK(run_status(P("p"), {}).legal());
}

TEST_CASE("winner on the delay game") {
  const Formula g = P(testing::kDelayGame);
  const Interpretation both{{"a", ConstPredicate{true}}, {"b", ConstPredicate{true}}};
  const Input e;
  CHECK(winner(g, parse_run("B1.1,T2.1.2"), both, e) == Player::Top);
  CHECK(winner(g, parse_run("T2.1.2,B1.1"), both, e) == Player::Top);
  CHECK(winner(g, parse_run(""), both, e) == Player::Top);
  CHECK(winner(g, parse_run("B1.1"), both, e) == Player::Bot);
  CHECK(winner(g, parse_run("T2.1.2"), both, e) == Player::Top);
  CHECK(winner(g, parse_run("B1.1"), Interpretation{{"a", ConstPredicate{true}}}, e) == Player::Bot);
  CHECK(winner(g, parse_run("TS"), both, e) == Player::Bot);
  CHECK(winner(g, parse_run("B2.1.1"), both, e) == Player::Top);
}

TEST_CASE("valuation_at") {
  CHECK(valuation_at({{"p", ConstPredicate{true}}}, Input::indexed(7)) == Valuation{{"p", true}});
  FirstTermTable t;
  t.table[3] = true;
  const Interpretation itp{{"p", t}};
  CHECK(valuation_at(itp, Input::indexed(3)) == Valuation{{"p", true}});
  CHECK(valuation_at(itp, Input::indexed(4)) == Valuation{{"p", false}});
  CHECK(constant_interpretation({{"q", false}}).size() == 1);
}

TEST_CASE("wn_generic") {
  CHECK(wn_generic(P("p + ~p"), {}, {{"p", true}}) == Player::Bot);
  CHECK(wn_generic(P("p * ~p"), {}, {{"p", false}}) == Player::Top);
  CHECK(wn_generic(P("a & b"), {}, {{"a", true}, {"b", false}}) == Player::Bot);
  CHECK(wn_generic(P(testing::kDelayGame), parse_run("B1.1,T2.1.2"), kAllTrue) == Player::Top);
  CHECK(wn_generic(P(testing::kDelayGame), parse_run("B1.1"), kAllTrue) == Player::Bot);
  CHECK(wn_generic(P("~(p + q)"), parse_run("B1"), {{"p", true}, {"q", false}}) == Player::Bot);
  CHECK(wn_generic(P("p"), parse_run("B1"), {{"p", true}}) == Player::Top);
}

TEST_CASE("projection and label reversal") {
  const Run r = parse_run("B1.1,T2.1.2");
  CHECK(run_projection(r, 1) == parse_run("B1"));
  CHECK(run_projection(r, 2) == parse_run("T1.2"));
  CHECK(run_projection({}, 4).empty());
  CHECK(reverse_labels(r) == parse_run("T1.1,B2.1.2"));
  CHECK(reverse_labels({}).empty());
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const Run x = testing::random_run(rng, 6);
    CHECK(reverse_labels(reverse_labels(x)) == x);
  }
}

TEST_CASE("delays") {
  const Run d = parse_run("B1.1,T2.1.2");
  const Run g = parse_run("T2.1.2,B1.1");
  CHECK(is_delay(d, g, Player::Top));
  CHECK_FALSE(is_delay(d, g, Player::Bot));
  CHECK(is_delay(g, g, Player::Bot));
  CHECK(is_delay(d, d, Player::Top));
  CHECK_FALSE(is_delay(parse_run("Ta,Bb"), parse_run("Bb,Ta"), Player::Top));
  CHECK_FALSE(is_delay(parse_run("T1"), parse_run("T2"), Player::Top));
}

TEST_CASE("static games") {
  CHECK(check_static(P("p + ~p"), {{"p", true}}));
  CHECK(check_static(P("p + ~p"), {{"p", false}}));
  CHECK(check_static(P("p"), {{"p", true}}));
  CHECK(check_static(P(testing::kDelayGame), kAllTrue));
  CHECK_THROWS_AS(check_static(P(testing::kDistribution), {}), std::length_error);
}

TEST_CASE("game equality") {
  CHECK(game_equal(P("~~p"), P("p")));
  CHECK(game_equal(P("p * q"), P("~(~p + ~q)")));
  CHECK(game_equal(P("p & q"), P("~(~p | ~q)")));
  CHECK_FALSE(game_equal(P("p * q"), P("p + q")));
  CHECK_FALSE(game_equal(P("p & q"), P("p | q")));
  CHECK(game_equal(P("p & q & r"), P("(p & q) & r")));
  CHECK_FALSE(game_equal(P("p & q & (r * s)"), P("(p & q) & (r * s)")));
}

TEST_CASE("enumerated legal runs") {
  CHECK(enumerate_legal_runs(P("p & ~q")) == std::vector<Run>{Run{}});
  const auto runs = enumerate_legal_runs(P("p + ~p"));
  CHECK(runs.size() == 3);
  CHECK(std::count(runs.begin(), runs.end(), Run{}) == 1);
}

TEST_CASE("property: evaluators agree on every legal run") {
  FormulaGen gen(41, {.max_atoms = 3, .max_connectives = 6});
  int checked = 0;
  while (checked < 150) {
    const Formula f = gen.next();
    if (f.choice_components() > 6) continue;
    ++checked;
    CAPTURE(to_string(f));
    for (const Run& r : enumerate_legal_runs(f)) {
      CHECK(structurally_legal(f, r));
      for (const Valuation& v : all_valuations(f.atoms())) CHECK(wn_generic(f, r, v) == winner(f, r, v));
    }
  }
}

TEST_CASE("property: legality analyses agree on random runs") {
  FormulaGen gen(42, {.max_atoms = 3, .max_connectives = 6});
  std::mt19937_64 rng(43);
  for (int i = 0; i < 1500; ++i) {
    const Formula f = gen.next();
    const Run r = i % 2 == 0 ? testing::random_run(rng, 4) : testing::random_walk(f, rng, 6);
    CAPTURE(to_string(f));
    CAPTURE(format_run(r));
    const RunStatus st = run_status(f, r);
    CHECK(st.illegal == structural_illegality(f, r));
    CHECK(st.legal() == structurally_legal(f, r));
    Valuation v;
    for (const std::string& a : f.atoms()) v[a] = rng() % 2 == 0;
    const Player w = winner(f, r, v);
    CHECK(wn_generic(f, r, v) == w);
    if (st.illegal) CHECK(w == adversary(st.illegal->offender));
  }
}

TEST_CASE("property: prefixation composes") {
  FormulaGen gen(44, {.max_atoms = 3, .max_connectives = 6});
  int checked = 0;
  while (checked < 150) {
    const Formula f = gen.next();
    if (f.choice_components() > 6) continue;
    ++checked;
    for (const Run& r : enumerate_legal_runs(f)) {
      for (std::size_t k = 0; k <= r.size(); ++k) {
        const Run phi(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
        const Run psi(r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
        const RunStatus head = run_status(f, phi);
        REQUIRE(head.legal());
        CHECK(run_status(head.position, psi).position == run_status(f, r).position);
      }
    }
  }
}

TEST_CASE("property: elementary games have only the empty run") {
  FormulaGen gen(45, {.choice = false});
  for (int i = 0; i < 300; ++i) CHECK(enumerate_legal_runs(gen.next()) == std::vector<Run>{Run{}});
}

TEST_CASE("property: De Morgan identities hold as games") {
  FormulaGen gen(46, {.max_depth = 2, .max_atoms = 2, .max_connectives = 2});
  int checked = 0;
  while (checked < 60) {
    const Formula x = gen.next();
    const Formula y = gen.next();
    if (x.choice_components() + y.choice_components() > 4) continue;
    ++checked;
    CAPTURE(to_string(x));
    CAPTURE(to_string(y));
    const auto n = [](const Formula& f) { return Formula::neg(f); };
    CHECK(game_equal(n(n(x)), x));
    CHECK(game_equal(Formula::conj({x, y}), n(Formula::disj({n(x), n(y)}))));
    CHECK(game_equal(Formula::ch_and({x, y}), n(Formula::ch_or({n(x), n(y)}))));
  }
}

TEST_CASE("property: small games are static") {
  FormulaGen gen(47, {.max_atoms = 2, .max_connectives = 5});
  int checked = 0;
  while (checked < 80) {
    const Formula f = gen.next();
    if (f.choice_components() > 5) continue;
    ++checked;
    CAPTURE(to_string(f));
    for (const Valuation& v : all_valuations(f.atoms())) CHECK(check_static(f, v));
  }
}
