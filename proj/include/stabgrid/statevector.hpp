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

#ifndef STABGRID_STATEVECTOR_HPP
#define STABGRID_STATEVECTOR_HPP

#include <complex>
#include <vector>

#include "stabgrid/lattice.hpp"
#include "stabgrid/pauli.hpp"
#include "stabgrid/planner.hpp"

namespace stabgrid {

/// Dense amplitudes of the ideal cluster state: plus states entangled by a
/// CZ along every lattice edge. Limited to kStatevectorMaxSites sites.
inline constexpr std::size_t kStatevectorMaxSites = 12;

class ClusterStatevector {
  public:
    explicit ClusterStatevector(const Lattice& lattice);

    std::size_t num_sites() const { return num_sites_; }

    /// Exact ⟨ψ|P|ψ⟩ including the tracked phase.
    std::complex<double> expectation(const PauliOperator& p) const;

    /// Cumulative outcome distribution after rotating every site into the
    /// pattern's measurement basis (bitstring index order, last entry 1).
    std::vector<double> measurement_cdf(const MeasurementPattern& pattern) const;

  private:
    std::size_t num_sites_;
    std::vector<std::complex<double>> amps_;
};

}  // namespace stabgrid

#endif
