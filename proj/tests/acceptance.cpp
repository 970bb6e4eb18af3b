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

// Acceptance suite: one PASS/FAIL line per criterion, each under its time
// limit. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cl1/generic.hpp"
#include "cl1/parse.hpp"
#include "cl1/proof.hpp"
#include "cl1/verify.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cl1;
using cl1::testing::FormulaGen;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

Formula P(const char* s) { return parse_formula(s); }

const testing::Corpus& corpus() {
  static const testing::Corpus c = testing::build_corpus(100);
  return c;
}

std::vector<Formula> corpus_formulas() {
  std::vector<Formula> all = corpus().provable;
  all.insert(all.end(), corpus().unprovable.begin(), corpus().unprovable.end());
  all.push_back(P(testing::kDelayGame));
  return all;
}

Outcome reference_vectors() {
  Outcome o;
  for (const auto& v : testing::reference_vectors()) {
    const bool got = prove(P(v.text), System::CL1).has_value();
    if (got != v.provable) {
      o.ok = false;
      o.detail += std::string(v.text) + (got ? " proved; " : " not proved; ");
    }
  }
  if (o.ok) o.detail = std::to_string(testing::reference_vectors().size()) + " formulas";
  return o;
}

Outcome duality() {
  Outcome o;
  FormulaGen gen(1001);
  std::size_t cl1 = 0;
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.next();
    const bool a = Prover(System::CL1).provable(f);
    const bool b = Prover(System::CL1Prime).provable(f);
    if (a == b) {
      o.ok = false;
      o.detail += to_string(f) + (a ? " proved by both; " : " proved by neither; ");
    }
    cl1 += a ? 1 : 0;
  }
  if (o.ok) o.detail = "500 formulas, " + std::to_string(cl1) + " in CL1, " + std::to_string(500 - cl1) + " in CL1'";
  return o;
}

Outcome classical_fragment() {
  Outcome o;
  FormulaGen gen(1002, {.choice = false});
  std::size_t taut = 0;
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.next();
    const bool want = testing::oracle_tautology(f);
    if (prove(f, System::CL1).has_value() != want) {
      o.ok = false;
      o.detail += to_string(f) + "; ";
    }
    taut += want ? 1 : 0;
  }
  if (o.ok) o.detail = "500 formulas, " + std::to_string(taut) + " tautologies";
  return o;
}

Outcome soundness() {
  Outcome o;
  std::size_t branches = 0, nodes = 0;
  for (const Formula& f : corpus().provable) {
    const auto p = prove(f, System::CL1);
    if (!p) {
      o.ok = false;
      o.detail += to_string(f) + ": no proof; ";
      continue;
    }
    const StrategyReport r = verify_winning(f, *p);
    if (!r.passed) {
      o.ok = false;
      o.detail += to_string(f) + (r.failures.empty() ? "" : ": " + r.failures.front()) + "; ";
    }
    branches += r.branches.size();
    nodes += r.nodes;
  }
  if (o.ok) {
    o.detail = std::to_string(corpus().provable.size()) + " formulas, " + std::to_string(branches) + " branches, " +
               std::to_string(nodes) + " nodes";
  }
  return o;
}

Outcome completeness() {
  Outcome o;
  std::size_t limits = 0;
  for (const Formula& f : corpus().unprovable) {
    const auto p = prove(f, System::CL1Prime);
    if (!p) {
      o.ok = false;
      o.detail += to_string(f) + ": no proof; ";
      continue;
    }
    const StrategyReport r = verify_counter(f, *p);
    bool good = r.passed && r.models.size() == r.limits.size();
    for (std::size_t i = 0; good && i < r.limits.size(); ++i) {
      good = !classical_truth(elementarize(r.limits[i]), r.models[i]);
    }
    if (!good) {
      o.ok = false;
      o.detail += to_string(f) + (r.failures.empty() ? "" : ": " + r.failures.front()) + "; ";
    }
    limits += r.limits.size();
  }
  if (o.ok) {
    o.detail = std::to_string(corpus().unprovable.size()) + " formulas, " + std::to_string(limits) +
               " limits each with a falsifying valuation";
  }
  return o;
}

Outcome diagonal() {
  const Formula f = P(testing::kParallelConsequent);
  std::vector<std::unique_ptr<Agent>> family;
  family.push_back(std::make_unique<ScriptedAgent>(std::vector<Move>{Move::parse("1.1")}));
  family.push_back(std::make_unique<ScriptedAgent>(std::vector<Move>{}));
  family.push_back(std::make_unique<ScriptedAgent>(std::vector<Move>{Move::parse("1.2")}));
  for (std::uint64_t seed = 1; seed <= 7; ++seed) family.push_back(std::make_unique<RandomAgent>(f, seed));
  const DiagonalReport r = diagonal_interpretation(f, family, *prove(f, System::CL1Prime));
  Outcome o;
  o.ok = r.problems.empty() && r.all_lost() && r.entries.size() == 10;
  for (const DiagonalEntry& e : r.entries) {
    if (winner(f, e.run, r.interpretation, Input::indexed(e.index)) != Player::Bot) o.ok = false;
  }
  o.detail = "10 policies, " + std::to_string(r.instable_limits.size()) + " distinct limits";
  for (const std::string& p : r.problems) o.detail += "; " + p;
  return o;
}

// Every move either player could try at a position that is not legal for them.
std::vector<LabeledMove> illegal_probes(const Formula& position) {
  std::vector<LabeledMove> out;
  for (Player p : {Player::Top, Player::Bot}) {
    out.push_back({p, Move::spade()});
    out.push_back({p, Move::parse("9")});
    out.push_back({p, Move::parse("1.9.9")});
    for (const Move& m : legal_moves(position, adversary(p))) out.push_back({p, m});
  }
  return out;
}

Outcome evaluator_equivalence() {
  Outcome o;
  std::size_t formulas = 0, runs = 0, probes = 0;
  for (const Formula& f : corpus_formulas()) {
    if (f.choice_components() > kDefaultStaticBound) continue;
    ++formulas;
    const auto vals = all_valuations(f.atoms());
    for (const Run& r : enumerate_legal_runs(f)) {
      ++runs;
      const RunStatus st = run_status(f, r);
      for (const Valuation& v : vals) {
        if (wn_generic(f, r, v) != winner(f, r, v)) {
          o.ok = false;
          o.detail += to_string(f) + " on " + format_run(r) + "; ";
        }
      }
      for (const LabeledMove& lm : illegal_probes(st.position)) {
        if (apply_move(st.position, lm)) continue;
        ++probes;
        Run x = r;
        x.push_back(lm);
        const auto want = Illegality{lm.player, r.size()};
        const bool same = run_status(f, x).illegal == want && structural_illegality(f, x) == want &&
                          wn_generic(f, x, vals.front()) == adversary(lm.player) &&
                          winner(f, x, vals.front()) == adversary(lm.player);
        if (!same) {
          o.ok = false;
          o.detail += to_string(f) + " probe " + format_run(x) + "; ";
        }
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(formulas) + " formulas, " + std::to_string(runs) + " legal runs, " +
               std::to_string(probes) + " illegal probes";
  }
  return o;
}

Outcome delay_game_fixtures() {
  // Expected winners worked out by hand from the limit formulas.
  struct Fixture {
    const char* run;
    const char* limit;
    Player winner;
  };
  const Fixture fixtures[] = {
      {"B1.1,T2.1.2", "a -> b & 1", Player::Top},
      {"T2.1.2,B1.1", "a -> b & 1", Player::Top},
      {"", "(a + ~a) -> (~b + b) & 1", Player::Top},
      {"B1.1", "a -> (~b + b) & 1", Player::Bot},
      {"T2.1.2", "(a + ~a) -> b & 1", Player::Top},
  };
  const Formula g = P(testing::kDelayGame);
  const Interpretation itp{{"a", ConstPredicate{true}}, {"b", ConstPredicate{true}}};
  const Valuation v{{"a", true}, {"b", true}};
  Outcome o;
  for (const Fixture& fx : fixtures) {
    const Run r = parse_run(fx.run);
    const RunStatus st = run_status(g, r);
    const bool good = st.legal() && st.position == P(fx.limit) && winner(g, r, itp, Input::indexed(5)) == fx.winner &&
                      wn_generic(g, r, v) == fx.winner;
    if (!good) {
      o.ok = false;
      o.detail += std::string("<") + fx.run + "> ";
    }
  }
  if (o.ok) o.detail = "5 runs";
  return o;
}

Outcome static_and_identities() {
  Outcome o;
  std::size_t checked = 0;
  for (const Formula& f : corpus_formulas()) {
    if (f.choice_components() > kDefaultStaticBound) continue;
    for (const Valuation& v : all_valuations(f.atoms())) {
      ++checked;
      if (!check_static(f, v)) {
        o.ok = false;
        o.detail += to_string(f) + " not static; ";
      }
    }
  }
  const char* parts[] = {"p", "q * r", "p + ~q", "~(q * p)", "(p * q) & r"};
  std::size_t identities = 0;
  for (const char* a : parts) {
    const Formula x = P(a);
    const auto n = [](const Formula& f) { return Formula::neg(f); };
    identities += 1;
    if (!game_equal(x, n(n(x)))) o.ok = false, o.detail += std::string(a) + " double negation; ";
    for (const char* b : parts) {
      const Formula y = P(b);
      if (x.choice_components() + y.choice_components() + 2 > kDefaultStaticBound) continue;
      identities += 2;
      if (!game_equal(Formula::conj({x, y}), n(Formula::disj({n(x), n(y)})))) {
        o.ok = false;
        o.detail += std::string(a) + ", " + b + " parallel; ";
      }
      if (!game_equal(Formula::ch_and({x, y}), n(Formula::ch_or({n(x), n(y)})))) {
        o.ok = false;
        o.detail += std::string(a) + ", " + b + " choice; ";
      }
    }
  }
  identities += 1;
  if (!game_equal(P(testing::kDelayGame), P("(~a * a) | ((~b + b) & 1)"))) {
    o.ok = false;
    o.detail += "delay game as a disjunction; ";
  }
  if (o.ok) {
    o.detail = std::to_string(checked) + " static checks, " + std::to_string(identities) + " identities";
  }
  return o;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"reference-vectors", 1, reference_vectors},
      {"duality", 30, duality},
      {"classical-fragment", 10, classical_fragment},
      {"soundness", 60, soundness},
      {"completeness", 60, completeness},
      {"diagonal", 10, diagonal},
      {"evaluator-equivalence", 30, evaluator_equivalence},
      {"delay-game-fixtures", 1, delay_game_fixtures},
      {"static-and-identities", 30, static_and_identities},
  };
  // Building the shared corpus is not part of any one criterion's budget.
  const auto c0 = std::chrono::steady_clock::now();
  corpus();
  const double corpus_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - c0).count();
  std::printf("corpus: %zu provable, %zu unprovable (%.2fs)\n", corpus().provable.size(), corpus().unprovable.size(),
              corpus_s);

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && s < c.limit_seconds;
    if (!pass) ++failed;
    std::printf("%s %-22s %7.3fs (limit %.0fs)  %s\n", pass ? "PASS" : "FAIL", c.name, s, c.limit_seconds,
                o.detail.c_str());
  }
  return failed;
}
