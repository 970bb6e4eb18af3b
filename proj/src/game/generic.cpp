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

#include "cl1/generic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace cl1 {
namespace {

bool has_component_prefix(const Move& m, std::size_t n) {
  if (m.kind() == Move::Kind::Spade) return false;
  const std::string& t = m.text();
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string p = std::to_string(i) + ".";
    if (t.compare(0, p.size(), p) == 0) return true;
  }
  return false;
}

bool is_component_choice(const LabeledMove& lm, Player by, std::size_t n, std::size_t& picked) {
  if (lm.player != by || lm.move.kind() != Move::Kind::Choice) return false;
  for (std::size_t i = 1; i <= n; ++i) {
    if (lm.move.text() == std::to_string(i)) {
      picked = i;
      return true;
    }
  }
  return false;
}

Run tail(const Run& run) { return Run(run.begin() + 1, run.end()); }

// Winner on a run already known to be legal in f.
Player wn_legal(const Formula& f, const Run& run, const Valuation& v) {
  switch (f.op()) {
    case Op::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw std::invalid_argument("valuation has no entry for atom '" + f.name() + "'");
      return it->second ? Player::Top : Player::Bot;
    }
    case Op::Top: return Player::Top;
    case Op::Bot: return Player::Bot;
    case Op::Neg: return adversary(wn_legal(f.child(1), reverse_labels(run), v));
    case Op::And:
      for (std::size_t i = 1; i <= f.arity(); ++i) {
        if (wn_legal(f.child(i), run_projection(run, i), v) == Player::Bot) return Player::Bot;
      }
      return Player::Top;
    case Op::Or:
      for (std::size_t i = 1; i <= f.arity(); ++i) {
        if (wn_legal(f.child(i), run_projection(run, i), v) == Player::Top) return Player::Top;
      }
      return Player::Bot;
    case Op::Imp: {
      // A -> B is ¬A ∨ B.
      const Player lhs = adversary(wn_legal(f.child(1), reverse_labels(run_projection(run, 1)), v));
      if (lhs == Player::Top) return Player::Top;
      return wn_legal(f.child(2), run_projection(run, 2), v);
    }
    case Op::ChAnd:
    case Op::ChOr: {
      const Player by = f.op() == Op::ChAnd ? Player::Bot : Player::Top;
      std::size_t i = 0;
      if (run.empty() || !is_component_choice(run.front(), by, f.arity(), i)) return adversary(by);
      return wn_legal(f.child(i), tail(run), v);
    }
  }
  return Player::Bot;
}

void extend(const Formula& position, Run& run, std::vector<Run>& out) {
  out.push_back(run);
  for (Player p : {Player::Top, Player::Bot}) {
    for (LegalMove& m : legal_move_details(position, p)) {
      run.push_back({p, m.move});
      extend(m.result, run, out);
      run.pop_back();
    }
  }
}

void check_bound(const Formula& f, std::size_t bound) {
  if (f.choice_components() > bound) {
    throw std::length_error(to_string(f) + " has " + std::to_string(f.choice_components()) +
                            " choice components; the bound is " + std::to_string(bound));
  }
}

std::set<std::string> run_keys(const std::vector<Run>& runs) {
  std::set<std::string> out;
  for (const Run& r : runs) out.insert(format_run(r));
  return out;
}

}  // namespace

bool structurally_legal(const Formula& f, const Run& position) {
  if (position.empty()) return true;
  switch (f.op()) {
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
      return false;
    case Op::Neg:
      return structurally_legal(f.child(1), reverse_labels(position));
    case Op::And:
    case Op::Or:
    case Op::Imp: {
      for (const LabeledMove& lm : position) {
        if (!has_component_prefix(lm.move, f.arity())) return false;
      }
      for (std::size_t i = 1; i <= f.arity(); ++i) {
        Run sub = run_projection(position, i);
        if (f.op() == Op::Imp && i == 1) sub = reverse_labels(sub);
        if (!structurally_legal(f.child(i), sub)) return false;
      }
      return true;
    }
    case Op::ChAnd:
    case Op::ChOr: {
      const Player by = f.op() == Op::ChAnd ? Player::Bot : Player::Top;
      std::size_t i = 0;
      if (!is_component_choice(position.front(), by, f.arity(), i)) return false;
      return structurally_legal(f.child(i), tail(position));
    }
  }
  return false;
}

std::optional<Illegality> structural_illegality(const Formula& f, const Run& run) {
  Run prefix;
  for (std::size_t k = 0; k < run.size(); ++k) {
    prefix.push_back(run[k]);
    if (!structurally_legal(f, prefix)) return Illegality{run[k].player, k};
  }
  return std::nullopt;
}

Player wn_generic(const Formula& f, const Run& run, const Valuation& v) {
  if (const auto bad = structural_illegality(f, run)) return adversary(bad->offender);
  return wn_legal(f, run, v);
}

std::vector<Run> enumerate_legal_runs(const Formula& f) {
  std::vector<Run> out;
  Run run;
  extend(f, run, out);
  return out;
}

bool check_static(const Formula& f, const Valuation& v, std::size_t bound) {
  check_bound(f, bound);
  for (const Run& run : enumerate_legal_runs(f)) {
    const Player w = wn_generic(f, run, v);
    std::vector<std::size_t> order(run.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      Run delayed;
      delayed.reserve(run.size());
      for (std::size_t k : order) delayed.push_back(run[k]);
      if (is_delay(delayed, run, w) && wn_generic(f, delayed, v) != w) return false;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return true;
}

bool game_equal(const Formula& f, const Formula& g, const std::vector<Valuation>& valuations,
                std::size_t bound) {
  check_bound(f, bound);
  check_bound(g, bound);
  const std::vector<Run> runs = enumerate_legal_runs(f);
  if (run_keys(runs) != run_keys(enumerate_legal_runs(g))) return false;

  std::vector<Valuation> vs = valuations;
  if (vs.empty()) {
    std::set<std::string> atoms = f.atoms();
    const std::set<std::string> more = g.atoms();
    atoms.insert(more.begin(), more.end());
    vs = all_valuations(atoms);
  }

  std::vector<Move> vocabulary{Move::spade()};
  for (const Run& r : runs) {
    for (const LabeledMove& lm : r) {
      if (std::find(vocabulary.begin(), vocabulary.end(), lm.move) == vocabulary.end()) {
        vocabulary.push_back(lm.move);
      }
    }
  }

  std::vector<Run> probes = runs;
  for (const Run& r : runs) {
    for (Player p : {Player::Top, Player::Bot}) {
      for (const Move& m : vocabulary) {
        Run ext = r;
        ext.push_back({p, m});
        if (!structurally_legal(f, ext)) probes.push_back(std::move(ext));
      }
    }
  }

  for (const Valuation& v : vs) {
    for (const Run& r : probes) {
      if (wn_generic(f, r, v) != wn_generic(g, r, v)) return false;
    }
  }
  return true;
}

}  // namespace cl1
