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

#include "cl1/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace cl1 {

char to_char(Player p) { return p == Player::Top ? 'T' : 'B'; }

Player player_from_char(char c) {
  if (c == 'T') return Player::Top;
  if (c == 'B') return Player::Bot;
  throw std::invalid_argument(std::string("unknown player label '") + c + "'");
}

Player chooser(const ChoiceSpec& s) {
  const bool env = (s.kind == Op::ChAnd) == (s.polarity == Polarity::Positive);
  return env ? Player::Bot : Player::Top;
}

Move Move::parse(std::string_view text) {
  if (text == "S" || text == "♠") return spade();
  const bool dotted = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '.';
  });
  return Move(dotted ? Kind::Choice : Kind::Raw, std::string(text));
}

Run parse_run(std::string_view text) {
  Run run;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view item = text.substr(i, j - i);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.size() < 2) throw std::invalid_argument("malformed labeled move '" + std::string(item) + "'");
    run.push_back({player_from_char(item.front()), Move::parse(item.substr(1))});
    i = j + 1;
  }
  return run;
}

std::string format_run(const Run& run) {
  std::string out;
  for (std::size_t i = 0; i < run.size(); ++i) {
    if (i > 0) out += ',';
    out += to_char(run[i].player);
    out += run[i].move.text();
  }
  return out;
}

Input::Input(std::vector<std::uint64_t> terms) : terms_(std::move(terms)) {
  while (!terms_.empty() && terms_.back() == 0) terms_.pop_back();
}

bool holds(const Predicate& p, const Input& e) {
  if (const auto* c = std::get_if<ConstPredicate>(&p)) return c->value;
  const auto& t = std::get<FirstTermTable>(p);
  auto it = t.table.find(e.term(0));
  return it == t.table.end() ? t.fallback : it->second;
}

Valuation valuation_at(const Interpretation& itp, const Input& e) {
  Valuation v;
  for (const auto& [atom, pred] : itp) v[atom] = holds(pred, e);
  return v;
}

Interpretation constant_interpretation(const Valuation& v) {
  Interpretation itp;
  for (const auto& [atom, value] : v) itp[atom] = ConstPredicate{value};
  return itp;
}

std::vector<LegalMove> legal_move_details(const Formula& f, Player p) {
  std::vector<LegalMove> out;
  for (const ChoiceSpec& s : surface_choice_occurrences(f)) {
    if (chooser(s) != p) continue;
    for (std::size_t i = 1; i <= s.arity; ++i) {
      out.push_back({Move::choice(s.move_for(i)), s, i, substitute_at(f, s, i)});
    }
  }
  return out;
}

std::vector<Move> legal_moves(const Formula& f, Player p) {
  std::vector<Move> out;
  for (LegalMove& m : legal_move_details(f, p)) out.push_back(std::move(m.move));
  return out;
}

std::optional<Formula> apply_move(const Formula& f, const LabeledMove& lm) {
  if (lm.move.kind() != Move::Kind::Choice) return std::nullopt;
  const std::string& text = lm.move.text();
  const std::size_t cut = text.rfind('.');
  const std::string prefix = cut == std::string::npos ? std::string() : text.substr(0, cut + 1);
  const std::string digits = cut == std::string::npos ? text : text.substr(cut + 1);
  if (digits.empty() || digits.size() > 9 || digits.front() == '0') return std::nullopt;
  const std::size_t component = std::stoul(digits);
  const auto occ = find_occurrence(f, prefix);
  if (!occ || chooser(*occ) != lm.player || component > occ->arity) return std::nullopt;
  return substitute_at(f, *occ, component);
}

RunStatus run_status(const Formula& f, const Run& run) {
  RunStatus st{f, std::nullopt};
  for (std::size_t i = 0; i < run.size(); ++i) {
    auto next = apply_move(st.position, run[i]);
    if (!next) {
      st.illegal = Illegality{run[i].player, i};
      return st;
    }
    st.position = std::move(*next);
  }
  return st;
}

Player winner(const Formula& f, const Run& run, const Valuation& v) {
  const RunStatus st = run_status(f, run);
  if (st.illegal) return adversary(st.illegal->offender);
  return classical_truth(elementarize(st.position), v) ? Player::Top : Player::Bot;
}

Player winner(const Formula& f, const Run& run, const Interpretation& itp, const Input& e) {
  return winner(f, run, valuation_at(itp, e));
}

Run run_projection(const Run& run, std::size_t i) {
  const std::string prefix = std::to_string(i) + ".";
  Run out;
  for (const LabeledMove& lm : run) {
    const std::string& t = lm.move.text();
    if (lm.move.kind() != Move::Kind::Spade && t.compare(0, prefix.size(), prefix) == 0) {
      out.push_back({lm.player, Move::parse(t.substr(prefix.size()))});
    }
  }
  return out;
}

Run reverse_labels(const Run& run) {
  Run out = run;
  for (LabeledMove& lm : out) lm.player = adversary(lm.player);
  return out;
}

namespace {

std::vector<std::size_t> positions_of(const Run& run, Player p) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < run.size(); ++i) {
    if (run[i].player == p) pos.push_back(i);
  }
  return pos;
}

bool same_moves(const Run& a, const std::vector<std::size_t>& pa, const Run& b,
                const std::vector<std::size_t>& pb) {
  if (pa.size() != pb.size()) return false;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    if (a[pa[k]].move != b[pb[k]].move) return false;
  }
  return true;
}

}  // namespace

bool is_delay(const Run& delayed, const Run& original, Player p) {
  if (delayed.size() != original.size()) return false;
  const Player q = adversary(p);
  const auto dp = positions_of(delayed, p), dq = positions_of(delayed, q);
  const auto op = positions_of(original, p), oq = positions_of(original, q);
  if (!same_moves(delayed, dp, original, op) || !same_moves(delayed, dq, original, oq)) return false;
  for (std::size_t n = 0; n < op.size(); ++n) {
    for (std::size_t k = 0; k < oq.size(); ++k) {
      if (op[n] > oq[k] && dp[n] < dq[k]) return false;
    }
  }
  return true;
}

}  // namespace cl1
