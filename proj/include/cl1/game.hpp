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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cl1/classical.hpp"
#include "cl1/formula.hpp"
#include "cl1/occurrence.hpp"

namespace cl1 {

// Top is the machine, Bot the environment.
enum class Player { Top, Bot };

inline Player adversary(Player p) { return p == Player::Top ? Player::Bot : Player::Top; }
char to_char(Player p);  // 'T' or 'B'
Player player_from_char(char c);

// The player who picks the component of a surface occurrence: the
// environment resolves positive ⊓ and negative ⊔, the machine the rest.
Player chooser(const ChoiceSpec& s);

class Move {
 public:
  enum class Kind { Choice, Spade, Raw };

  // "S" and "♠" read as the always-illegal move; nonempty digit-and-dot
  // strings are choice moves; anything else is kept verbatim as junk.
  static Move parse(std::string_view text);
  static Move spade() { return Move(Kind::Spade, "S"); }
  static Move choice(std::string text) { return Move(Kind::Choice, std::move(text)); }

  Kind kind() const { return kind_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const Move&, const Move&) = default;

 private:
  Move(Kind k, std::string text) : kind_(k), text_(std::move(text)) {}
  Kind kind_;
  std::string text_;
};

struct LabeledMove {
  Player player;
  Move move;
  friend bool operator==(const LabeledMove&, const LabeledMove&) = default;
};

using Run = std::vector<LabeledMove>;

// "B1.1,T2.1.2"; "TS" is the machine playing ♠. Throws std::invalid_argument.
Run parse_run(std::string_view text);
std::string format_run(const Run& run);

// Finite prefix of an input sequence; the rest is zeros. Canonical form has
// no trailing zeros.
class Input {
 public:
  Input() = default;
  explicit Input(std::vector<std::uint64_t> terms);
  static Input indexed(std::uint64_t c) { return Input({c}); }

  const std::vector<std::uint64_t>& terms() const { return terms_; }
  std::uint64_t term(std::size_t i) const { return i < terms_.size() ? terms_[i] : 0; }
  friend bool operator==(const Input&, const Input&) = default;

 private:
  std::vector<std::uint64_t> terms_;
};

struct ConstPredicate {
  bool value;
};

// Truth depends on the first input term only.
struct FirstTermTable {
  std::map<std::uint64_t, bool> table;
  bool fallback = false;
};

using Predicate = std::variant<ConstPredicate, FirstTermTable>;
using Interpretation = std::map<std::string, Predicate>;

bool holds(const Predicate& p, const Input& e);
Valuation valuation_at(const Interpretation& itp, const Input& e);
Interpretation constant_interpretation(const Valuation& v);

struct Illegality {
  Player offender;
  std::size_t index;
  friend bool operator==(const Illegality&, const Illegality&) = default;
};

struct RunStatus {
  // Game reached by the longest legal prefix; the full run's limit when legal.
  Formula position;
  std::optional<Illegality> illegal;

  bool legal() const { return !illegal.has_value(); }
};

struct LegalMove {
  Move move;
  ChoiceSpec spec;
  std::size_t component;
  Formula result;
};

// Moves β·i open to player p, with the game each one leads to.
std::vector<LegalMove> legal_move_details(const Formula& f, Player p);
std::vector<Move> legal_moves(const Formula& f, Player p);

// The game after lm, or nullopt if lm is illegal in f.
std::optional<Formula> apply_move(const Formula& f, const LabeledMove& lm);

RunStatus run_status(const Formula& f, const Run& run);

// Outcome through prefixation: an illegal run is lost by its first offender;
// otherwise ⊤ wins iff the limit's elementarization is true.
Player winner(const Formula& f, const Run& run, const Valuation& v);
Player winner(const Formula& f, const Run& run, const Interpretation& itp, const Input& e);

// Moves prefixed "i." with the prefix removed.
Run run_projection(const Run& run, std::size_t i);
Run reverse_labels(const Run& run);

// Is delayed a p-delay of original?
bool is_delay(const Run& delayed, const Run& original, Player p);

}  // namespace cl1
