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

#ifndef STABGRID_OPTIMIZER_HPP
#define STABGRID_OPTIMIZER_HPP

#include <cstdint>
#include <vector>

#include "stabgrid/estimator.hpp"  // Exec
#include "stabgrid/stabilizer.hpp"

namespace stabgrid {

enum class OptimizerMode { Exact, Heuristic };

struct OptimizedBasis {
    StabilizerSet set;         // size n, rank n, inside the canonical group
    double total_penalty = 0.0;
    OptimizerMode mode = OptimizerMode::Exact;
    std::vector<double> certificate;  // exact mode: the sorted penalty profile
};

/// Group element scored for basis selection. The canonical generators have
/// x = e_a, so a combination mask doubles as the element's X support.
struct ScoredElement {
    std::uint32_t mask = 0;    // generator combination = X support bits
    std::uint32_t z_bits = 0;  // Z support bits
    double penalty = 0.0;
    std::uint32_t weight = 0;  // popcount(x | z)
};

inline constexpr std::size_t kExactSiteLimit = 20;

/// Scores all 2^n − 1 nontrivial canonical-group elements, Gray-walk order
/// by index. Serial reference and OpenMP kernel produce identical output.
std::vector<ScoredElement> score_group_elements(const Lattice& lattice,
                                                Exec exec = Exec::Serial);

/// Sorts candidates by (penalty, support weight, lexicographic (x|z)
/// bitstring) ascending. Exposed so tests can pin the ordering.
void sort_scored(std::vector<ScoredElement>& elements);

/// Minimum-total-penalty generating set: full group enumeration, sorted
/// greedy over the GF(2) linear matroid (exact by the exchange property).
OptimizedBasis min_penalty_basis_exact(LatticePtr lattice, Exec exec = Exec::OpenMP);

/// Greedy over a candidate pool: canonical set ∪ kernel lifts ∪ products of
/// ≤ max_product_degree canonical generators pairwise within graph distance 2.
OptimizedBasis min_penalty_basis_heuristic(LatticePtr lattice, std::size_t max_product_degree,
                                           Exec exec = Exec::OpenMP);

}  // namespace stabgrid

#endif
