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

#include "cl1/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "cl1/generic.hpp"
#include "cl1/policy.hpp"

namespace cl1 {

Valuation falsifying_valuation(const Formula& limit) {
  const Formula e = elementarize(limit);
  for (Valuation& v : all_valuations(limit.atoms())) {
    if (!classical_truth(e, v)) return std::move(v);
  }
  throw std::invalid_argument(to_string(limit) + " is stable; no falsifying valuation exists");
}

std::size_t StrategyReport::stopped_branches() const {
  return static_cast<std::size_t>(
      std::count_if(branches.begin(), branches.end(), [](const Branch& b) { return !b.opponent_illegal; }));
}

std::size_t StrategyReport::illegal_branches() const { return branches.size() - stopped_branches(); }

namespace {

Valuation pad(Valuation v, const Formula& f) {
  for (const std::string& a : f.atoms()) v.emplace(a, false);
  return v;
}

class Explorer {
 public:
  Explorer(const Formula& f, System sys, std::size_t explicit_atoms, StrategyReport& report)
      : f_(f),
        sys_(sys),
        own_(sys == System::CL1 ? Player::Top : Player::Bot),
        report_(report) {
    if (f.atoms().size() <= explicit_atoms) {
      valuations_ = all_valuations(f.atoms());
    } else {
      valuations_ = {pad({}, f)};
    }
  }

  void explore(ProofPolicy pol, Run run) {
    check_position(pol, run);
    while (pol.phase() == ProofPolicy::Phase::Moving) {
      run.push_back({own_, pol.commit_move()});
      check_position(pol, run);
    }

    stop_here(pol, run);

    const Player adv = adversary(own_);
    for (const Move& m : legal_moves(pol.current(), adv)) {
      ProofPolicy next = pol;
      next.observe(m);
      Run longer = run;
      longer.push_back({adv, m});
      if (next.phase() == ProofPolicy::Phase::OpponentIllegal) {
        fail(longer, "policy rejected a legal adversary move");
        continue;
      }
      explore(std::move(next), std::move(longer));
    }

    // All illegal moves end the game the same way; one stands for the rest.
    const std::vector<Move> own_moves = legal_moves(pol.current(), own_);
    const Move bad = own_moves.empty() ? Move::spade() : own_moves.front();
    ProofPolicy next = pol;
    next.observe(bad);
    Run longer = run;
    longer.push_back({adv, bad});
    opponent_illegal(next, longer);
  }

 private:
  void fail(const Run& run, const std::string& what) {
    report_.passed = false;
    report_.failures.push_back(what + " at [" + format_run(run) + "]");
  }

  // The run so far is legal and has brought f down to the current record.
  void check_position(const ProofPolicy& pol, const Run& run) {
    ++report_.nodes;
    const RunStatus st = run_status(f_, run);
    if (!st.legal()) {
      fail(run, "run became illegal");
    } else if (st.position != pol.current()) {
      fail(run, "game is at " + to_string(st.position) + " but the record is " + to_string(pol.current()));
    }
  }

  void expect_winner(const Run& run, const Valuation& v, Player expected, const char* what) {
    const Player by_limit = winner(f_, run, v);
    const Player by_clauses = wn_generic(f_, run, v);
    if (by_limit != expected || by_clauses != expected) fail(run, std::string(what) + " not won by the policy");
  }

  void stop_here(const ProofPolicy& pol, const Run& run) {
    const Formula& limit = pol.current();
    report_.branches.push_back({run, limit, false});
    const bool fresh = std::find(report_.limits.begin(), report_.limits.end(), limit) == report_.limits.end();
    if (fresh) report_.limits.push_back(limit);

    const bool stable = is_stable(limit);
    if (sys_ == System::CL1) {
      if (!stable) {
        fail(run, "limit " + to_string(limit) + " is instable");
        return;
      }
      for (const Valuation& v : valuations_) expect_winner(run, v, own_, "stopped run");
    } else {
      if (stable) {
        fail(run, "limit " + to_string(limit) + " is stable");
        return;
      }
      const Valuation model = falsifying_valuation(limit);
      if (fresh) report_.models.push_back(model);
      expect_winner(run, pad(model, f_), own_, "stopped run");
    }
  }

  void opponent_illegal(const ProofPolicy& pol, const Run& run) {
    report_.branches.push_back({run, pol.current(), true});
    if (pol.phase() != ProofPolicy::Phase::OpponentIllegal) {
      fail(run, "policy accepted an illegal adversary move");
      return;
    }
    const RunStatus st = run_status(f_, run);
    const Illegality expected{adversary(own_), run.size() - 1};
    if (st.illegal != expected) {
      fail(run, "run not attributed to the adversary's last move");
      return;
    }
    for (const Valuation& v : valuations_) expect_winner(run, v, own_, "adversary-illegal run");
  }

  const Formula& f_;
  System sys_;
  Player own_;
  StrategyReport& report_;
  std::vector<Valuation> valuations_;
};

StrategyReport verify(const Formula& f, const Proof& p, System sys, std::size_t explicit_atoms) {
  if (p.system != sys) throw std::invalid_argument("expected a " + to_string(sys) + " proof");
  if (p.steps.empty() || p.goal() != f) throw std::invalid_argument("proof does not prove " + to_string(f));
  StrategyReport report;
  report.system = sys;
  Explorer(f, sys, explicit_atoms, report).explore(ProofPolicy(p), {});
  return report;
}

}  // namespace

StrategyReport verify_winning(const Formula& f, const Proof& p, std::size_t explicit_atoms) {
  return verify(f, p, System::CL1, explicit_atoms);
}

StrategyReport verify_counter(const Formula& f, const Proof& p, std::size_t explicit_atoms) {
  return verify(f, p, System::CL1Prime, explicit_atoms);
}

bool DiagonalReport::all_lost() const {
  return problems.empty() && std::all_of(entries.begin(), entries.end(),
                                         [](const DiagonalEntry& e) { return e.verdict == Player::Bot; });
}

DiagonalReport diagonal_interpretation(const Formula& f,
                                       std::vector<std::unique_ptr<Agent>>& policies,
                                       const Proof& p, std::size_t step_cap) {
  if (p.steps.empty() || p.goal() != f) throw std::invalid_argument("proof does not prove " + to_string(f));
  DiagonalReport rep;
  std::vector<std::size_t> which;  // entry -> index into instable_limits

  for (std::size_t c = 0; c < policies.size(); ++c) {
    ProofPolicy env = env_policy(p);
    const MatchRecord rec = play_match(f, *policies[c], env, Player::Bot, step_cap);
    DiagonalEntry entry{.index = c,
                        .run = rec.run,
                        .limit = env.current(),
                        .quiesced = rec.quiesced,
                        .machine_illegal = env.phase() == ProofPolicy::Phase::OpponentIllegal};
    if (!rec.quiesced) rep.problems.push_back("policy " + std::to_string(c) + " did not quiesce within the step cap");
    if (is_stable(entry.limit)) {
      rep.problems.push_back("policy " + std::to_string(c) + " reached stable limit " + to_string(entry.limit));
    }

    auto it = std::find(rep.instable_limits.begin(), rep.instable_limits.end(), entry.limit);
    if (it == rep.instable_limits.end()) {
      rep.instable_limits.push_back(entry.limit);
      rep.models.push_back(is_stable(entry.limit) ? pad({}, f) : pad(falsifying_valuation(entry.limit), f));
      it = rep.instable_limits.end() - 1;
    }
    which.push_back(static_cast<std::size_t>(it - rep.instable_limits.begin()));
    rep.entries.push_back(std::move(entry));
  }

  // p* is true at <c> iff p holds in the model of L_c; false elsewhere.
  for (const std::string& atom : f.atoms()) {
    FirstTermTable table;
    for (std::size_t c = 0; c < rep.entries.size(); ++c) {
      if (rep.models[which[c]].at(atom)) table.table[c] = true;
    }
    rep.interpretation[atom] = std::move(table);
  }

  for (DiagonalEntry& entry : rep.entries) {
    const Input e = Input::indexed(entry.index);
    entry.verdict = winner(f, entry.run, rep.interpretation, e);
    const Player structural = wn_generic(f, entry.run, valuation_at(rep.interpretation, e));
    if (entry.verdict != Player::Bot || structural != Player::Bot) {
      rep.problems.push_back("policy " + std::to_string(entry.index) + " wins on its own input");
    }
  }
  return rep;
}

}  // namespace cl1
