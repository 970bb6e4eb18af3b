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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cl1/formula.hpp"

namespace cl1 {

// Truth assignment for non-logical atoms. Must cover every atom queried.
using Valuation = std::map<std::string, bool>;

inline constexpr std::size_t kMaxTruthTableAtoms = 20;

// Classical value of an elementary formula. Throws std::invalid_argument on
// ⊓/⊔ nodes or atoms missing from v.
bool classical_truth(const Formula& f, const Valuation& v);

// Truth-table tautology test for an elementary formula. Throws
// std::length_error above kMaxTruthTableAtoms atoms.
bool is_tautology(const Formula& f);

// Stable iff the elementarization is a classical tautology.
bool is_stable(const Formula& f);

// First assignment (atoms in alphabetical order, first atom most
// significant, false before true) under which f is false. f must be
// elementary.
std::optional<Valuation> first_falsifier(const Formula& f);

// Every assignment over the given atoms, in the same order as first_falsifier.
std::vector<Valuation> all_valuations(const std::set<std::string>& atoms);

}  // namespace cl1
