// Copyright 2026 The stabgrid Authors
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

#ifndef STABGRID_PLANNER_HPP
#define STABGRID_PLANNER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "stabgrid/stabilizer.hpp"

namespace stabgrid {

enum class MeasBasis : char { X = 'X', Y = 'Y', Z = 'Z', Free = '.' };

/// Per-site single-qubit basis assignment applied globally, no per-stabilizer
/// addressing. Free sites default to Z, the native basis.
struct MeasurementPattern {
    std::vector<MeasBasis> basis;

    std::size_t num_sites() const { return basis.size(); }
    std::vector<MeasBasis> resolved() const;
    MeasBasis resolved_at(std::size_t site) const {
        return basis[site] == MeasBasis::Free ? MeasBasis::Z : basis[site];
    }
};

/// Two-coloring of a grid: A measures X on color 0 and Z on color 1, B the
/// swap. Together they cover the whole canonical set.
std::pair<MeasurementPattern, MeasurementPattern> checkerboard_patterns(const Lattice& lattice);

enum class PlanOrder { Given, PenaltyAscending, RandomSeeded };

/// Greedy covering: open a pattern, admit every uncovered stabilizer whose
/// per-site requirements fit the bases already pinned (first-fit in set
/// order), repeat until all are covered.
std::vector<MeasurementPattern> plan_patterns(const StabilizerSet& set,
                                              PlanOrder order = PlanOrder::Given,
                                              std::uint64_t seed = 0);

/// Σ over unordered adjacent pairs with differing resolved bases of a_jk².
double pattern_penalty(const MeasurementPattern& pattern, const Lattice& lattice);

/// True when every support site of s measures exactly s's Pauli there
/// (Y requirements match only Y assignments).
bool pattern_covers(const MeasurementPattern& pattern, const PauliOperator& s);

}  // namespace stabgrid

#endif
