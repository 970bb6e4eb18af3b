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

#include "cl1/proof.hpp"

#include <algorithm>
#include <stdexcept>

#include "cl1/classical.hpp"

namespace cl1 {

std::string to_string(System s) { return s == System::CL1 ? "CL1" : "CL1'"; }

std::optional<std::size_t> Proof::index_of(const Formula& f) const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].formula == f) return i;
  }
  return std::nullopt;
}

bool targeted_by_rule_a(const ChoiceSpec& s, System sys) {
  const bool env_owned = (s.kind == Op::ChAnd) == (s.polarity == Polarity::Positive);
  return sys == System::CL1 ? env_owned : !env_owned;
}

bool side_condition(const Formula& f, System sys) {
  return is_stable(f) == (sys == System::CL1);
}

std::vector<Formula> rule_a_premises(const Formula& f, System sys) {
  std::vector<Formula> out;
  for (const ChoiceSpec& s : surface_choice_occurrences(f)) {
    if (!targeted_by_rule_a(s, sys)) continue;
    for (std::size_t i = 1; i <= s.arity; ++i) {
      Formula h = substitute_at(f, s, i);
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
  }
  return out;
}

std::vector<RuleBOption> rule_b_options(const Formula& f, System sys) {
  std::vector<RuleBOption> out;
  for (const ChoiceSpec& s : surface_choice_occurrences(f)) {
    if (targeted_by_rule_a(s, sys)) continue;
    for (std::size_t i = 1; i <= s.arity; ++i) out.push_back({s, i, substitute_at(f, s, i)});
  }
  return out;
}

Prover::Entry Prover::solve(const Formula& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;

  // Every premise has strictly fewer choice nodes than f, so the recursion
  // is well founded and never revisits f while f is unresolved.
  Entry e;
  if (side_condition(f, system_)) {
    e.provable = true;
    for (const Formula& h : rule_a_premises(f, system_)) {
      if (!solve(h).provable) {
        e.provable = false;
        break;
      }
    }
  }
  if (!e.provable) {
    const std::vector<RuleBOption> opts = rule_b_options(f, system_);
    for (std::size_t k = 0; k < opts.size(); ++k) {
      if (solve(opts[k].premise).provable) {
        e.provable = true;
        e.via_b = k;
        break;
      }
    }
  }
  memo_.emplace(f, e);
  return e;
}

bool Prover::provable(const Formula& f) { return solve(f).provable; }

void Prover::emit(const Formula& f, Proof& out,
                  std::unordered_map<Formula, std::size_t, FormulaHash>& placed) {
  if (placed.count(f) != 0) return;
  const Entry e = solve(f);
  if (e.via_b) {
    RuleBOption opt = rule_b_options(f, system_)[*e.via_b];
    emit(opt.premise, out, placed);
    out.steps.push_back({f, RuleB{placed.at(opt.premise), std::move(opt.spec), opt.component}});
  } else {
    RuleA a;
    for (const Formula& h : rule_a_premises(f, system_)) {
      emit(h, out, placed);
      a.premises.push_back(placed.at(h));
    }
    out.steps.push_back({f, std::move(a)});
  }
  placed.emplace(f, out.steps.size() - 1);
}

std::optional<Proof> Prover::prove(const Formula& f) {
  if (!provable(f)) return std::nullopt;
  Proof out;
  out.system = system_;
  std::unordered_map<Formula, std::size_t, FormulaHash> placed;
  emit(f, out, placed);
  return out;
}

std::optional<Proof> prove(const Formula& f, System sys) { return Prover(sys).prove(f); }

namespace {

ProofCheck fail(std::size_t step, std::string reason) { return {false, step, std::move(reason)}; }

bool same_set(std::vector<Formula> a, std::vector<Formula> b) {
  auto unique_into = [](std::vector<Formula>& v) {
    std::vector<Formula> u;
    for (Formula& f : v) {
      if (std::find(u.begin(), u.end(), f) == u.end()) u.push_back(std::move(f));
    }
    v = std::move(u);
  };
  unique_into(a);
  unique_into(b);
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(),
                     [&](const Formula& f) { return std::find(b.begin(), b.end(), f) != b.end(); });
}

}  // namespace

ProofCheck check_proof(const Proof& p) {
  if (p.steps.empty()) return fail(0, "proof has no steps");
  std::unordered_map<Formula, std::size_t, FormulaHash> seen;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step& st = p.steps[i];
    if (!seen.emplace(st.formula, i).second) {
      return fail(i, "formula repeats step " + std::to_string(seen.at(st.formula)));
    }
    if (const auto* a = std::get_if<RuleA>(&st.justification)) {
      if (!side_condition(st.formula, p.system)) {
        return fail(i, p.system == System::CL1 ? "rule (a) conclusion is not stable"
                                               : "rule (a) conclusion is not instable");
      }
      std::vector<Formula> cited;
      for (std::size_t k : a->premises) {
        if (k >= i) return fail(i, "premise " + std::to_string(k) + " does not precede the conclusion");
        cited.push_back(p.steps[k].formula);
      }
      if (!same_set(cited, rule_a_premises(st.formula, p.system))) {
        return fail(i, "cited premises differ from the rule (a) premise set");
      }
    } else {
      const auto& b = std::get<RuleB>(st.justification);
      if (b.premise >= i) return fail(i, "premise " + std::to_string(b.premise) + " does not precede the conclusion");
      const auto occ = find_occurrence(st.formula, b.spec.string_form());
      if (!occ || occ->kind != b.spec.kind) {
        return fail(i, "'" + b.spec.string_form() + "' is not a surface choice occurrence");
      }
      if (targeted_by_rule_a(*occ, p.system)) {
        return fail(i, "occurrence '" + occ->string_form() + "' has the wrong polarity for rule (b)");
      }
      if (b.component < 1 || b.component > occ->arity) {
        return fail(i, "component " + std::to_string(b.component) + " out of range");
      }
      if (substitute_at(st.formula, *occ, b.component) != p.steps[b.premise].formula) {
        return fail(i, "premise does not match the substituted conclusion");
      }
    }
  }
  return {};
}

System duality_check(const Formula& f) {
  const bool in_cl1 = Prover(System::CL1).provable(f);
  const bool in_prime = Prover(System::CL1Prime).provable(f);
  if (in_cl1 == in_prime) {
    throw std::logic_error("duality violated for " + to_string(f) + ": " +
                           (in_cl1 ? "both systems prove it" : "neither system proves it"));
  }
  return in_cl1 ? System::CL1 : System::CL1Prime;
}

}  // namespace cl1
