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

#include "cl1/classical.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cl1 {
namespace {

// Postfix program over a bit-packed assignment; evaluates a row of the
// truth table without touching the tree or any map.
class Program {
 public:
  Program(const Formula& f, const std::vector<std::string>& atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i) index_[atoms[i]] = i;
    emit(f);
  }

  bool eval(std::uint32_t row, std::size_t width) const {
    std::vector<bool>& st = stack_;
    st.clear();
    for (const Instr& in : code_) {
      switch (in.op) {
        case Op::Atom: st.push_back(((row >> (width - 1 - in.arg)) & 1U) != 0); break;
        case Op::Top: st.push_back(true); break;
        case Op::Bot: st.push_back(false); break;
        case Op::Neg: st.back() = !st.back(); break;
        case Op::Imp: {
          const bool b = st.back();
          st.pop_back();
          st.back() = !st.back() || b;
          break;
        }
        case Op::And:
        case Op::Or: {
          bool acc = in.op == Op::And;
          for (std::size_t k = 0; k < in.arg; ++k) {
            acc = in.op == Op::And ? (acc && st.back()) : (acc || st.back());
            st.pop_back();
          }
          st.push_back(acc);
          break;
        }
        default: break;
      }
    }
    return st.back();
  }

 private:
  struct Instr {
    Op op;
    std::size_t arg;
  };

  void emit(const Formula& f) {
    if (is_choice(f.op())) throw std::invalid_argument("formula is not elementary: " + to_string(f));
    for (const Formula& c : f.children()) emit(c);
    if (f.op() == Op::Atom) {
      code_.push_back({Op::Atom, index_.at(f.name())});
    } else {
      code_.push_back({f.op(), f.arity()});
    }
  }

  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Instr> code_;
  mutable std::vector<bool> stack_;
};

std::vector<std::string> sorted_atoms(const Formula& f) {
  std::set<std::string> s = f.atoms();
  return {s.begin(), s.end()};
}

void check_width(std::size_t n) {
  if (n > kMaxTruthTableAtoms) {
    throw std::length_error("truth table over " + std::to_string(n) + " atoms exceeds the cap of " +
                            std::to_string(kMaxTruthTableAtoms));
  }
}

Valuation row_to_valuation(const std::vector<std::string>& atoms, std::uint32_t row) {
  Valuation v;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    v[atoms[i]] = ((row >> (atoms.size() - 1 - i)) & 1U) != 0;
  }
  return v;
}

}  // namespace

bool classical_truth(const Formula& f, const Valuation& v) {
  switch (f.op()) {
    case Op::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw std::invalid_argument("valuation has no entry for atom '" + f.name() + "'");
      return it->second;
    }
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Neg: return !classical_truth(f.child(1), v);
    case Op::Imp: return !classical_truth(f.child(1), v) || classical_truth(f.child(2), v);
    case Op::And:
      for (const Formula& c : f.children()) {
        if (!classical_truth(c, v)) return false;
      }
      return true;
    case Op::Or:
      for (const Formula& c : f.children()) {
        if (classical_truth(c, v)) return true;
      }
      return false;
    default:
      throw std::invalid_argument("formula is not elementary: " + to_string(f));
  }
}

bool is_tautology(const Formula& f) { return !first_falsifier(f).has_value(); }

bool is_stable(const Formula& f) { return is_tautology(elementarize(f)); }

std::optional<Valuation> first_falsifier(const Formula& f) {
  const std::vector<std::string> atoms = sorted_atoms(f);
  check_width(atoms.size());
  const Program prog(f, atoms);
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    if (!prog.eval(static_cast<std::uint32_t>(row), atoms.size())) {
      return row_to_valuation(atoms, static_cast<std::uint32_t>(row));
    }
  }
  return std::nullopt;
}

std::vector<Valuation> all_valuations(const std::set<std::string>& atom_set) {
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  check_width(atoms.size());
  std::vector<Valuation> out;
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  out.reserve(rows);
  for (std::uint64_t row = 0; row < rows; ++row) {
    out.push_back(row_to_valuation(atoms, static_cast<std::uint32_t>(row)));
  }
  return out;
}

}  // namespace cl1
