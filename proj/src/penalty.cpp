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

#include "stabgrid/penalty.hpp"

#include <stdexcept>

namespace stabgrid {

double stabilizer_penalty(const PauliOperator& p, const Lattice& lattice) {
    if (p.num_sites() != lattice.num_sites()) {
        throw std::invalid_argument("operator length does not match lattice size");
    }
    if (lattice.is_binary()) {
        // Binary lattice: contribution per ordered pair is 1, so the sum is a
        // popcount per X-site row.
        std::size_t total = 0;
        for (std::size_t j : p.x.ones()) {
            total += gf2::and_count(lattice.neighbor_bits(j), p.z);
        }
        return static_cast<double>(total);
    }
    double total = 0.0;
    for (std::size_t j : p.x.ones()) {
        for (std::size_t k : p.z.ones()) {
            double w = lattice.weight(j, k);
            total += w * w;
        }
    }
    return total;
}

PenaltyBreakdown total_penalty(const StabilizerSet& set) {
    const Lattice& lattice = *set.lattice;
    PenaltyBreakdown breakdown;
    breakdown.per_stabilizer.reserve(set.size());
    for (const auto& op : set.ops) {
        breakdown.per_stabilizer.push_back(stabilizer_penalty(op, lattice));
        breakdown.total += breakdown.per_stabilizer.back();
        for (std::size_t j : op.x.ones()) {
            for (std::size_t k : op.z.ones()) {
                double w = lattice.weight(j, k);
                if (w > 0.0) breakdown.per_edge[{j, k}] += w * w;
            }
        }
    }
    return breakdown;
}

}  // namespace stabgrid
