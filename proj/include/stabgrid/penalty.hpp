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

#ifndef STABGRID_PENALTY_HPP
#define STABGRID_PENALTY_HPP

#include <map>
#include <utility>
#include <vector>

#include "stabgrid/stabilizer.hpp"

namespace stabgrid {

struct PenaltyBreakdown {
    std::vector<double> per_stabilizer;
    double total = 0.0;
    /// Ordered (j,k) pairs with an X-type factor at j adjacent to a Z-type
    /// factor at k, accumulated over the set. Contribution is a_jk².
    std::map<std::pair<std::size_t, std::size_t>, double> per_edge;
};

/// Cross-talk penalty of one stabilizer: Σ_{j,k} x_j z_k a_jk². Y sites count
/// in both indicator vectors; the zero diagonal keeps same-site pairs out.
double stabilizer_penalty(const PauliOperator& p, const Lattice& lattice);

PenaltyBreakdown total_penalty(const StabilizerSet& set);

}  // namespace stabgrid

#endif
