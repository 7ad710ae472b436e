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

#include "stabgrid/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace stabgrid {

namespace {

using Complex = std::complex<double>;

// Applies a 2x2 unitary to one site of the amplitude vector.
void apply_single_qubit(std::vector<Complex>& amps, std::size_t site, const Complex u[2][2]) {
    std::uint64_t stride = std::uint64_t{1} << site;
    for (std::uint64_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::uint64_t off = 0; off < stride; off++) {
            Complex a0 = amps[base + off];
            Complex a1 = amps[base + off + stride];
            amps[base + off] = u[0][0] * a0 + u[0][1] * a1;
            amps[base + off + stride] = u[1][0] * a0 + u[1][1] * a1;
        }
    }
}

}  // namespace

ClusterStatevector::ClusterStatevector(const Lattice& lattice)
    : num_sites_(lattice.num_sites()) {
    if (num_sites_ > kStatevectorMaxSites) {
        throw std::invalid_argument("statevector backend is limited to " +
                                    std::to_string(kStatevectorMaxSites) + " sites");
    }
    std::uint64_t dim = std::uint64_t{1} << num_sites_;
    amps_.assign(dim, Complex(std::pow(2.0, -0.5 * static_cast<double>(num_sites_)), 0.0));
    for (std::size_t j = 0; j < num_sites_; j++) {
        for (std::size_t k = j + 1; k < num_sites_; k++) {
            if (!lattice.adjacent(j, k)) continue;
            std::uint64_t mask = (std::uint64_t{1} << j) | (std::uint64_t{1} << k);
            for (std::uint64_t b = 0; b < dim; b++) {
                if ((b & mask) == mask) amps_[b] = -amps_[b];
            }
        }
    }
}

std::complex<double> ClusterStatevector::expectation(const PauliOperator& p) const {
    if (p.num_sites() != num_sites_) throw std::invalid_argument("operator size mismatch");
    std::uint64_t x_mask = 0, z_mask = 0;
    for (std::size_t i : p.x.ones()) x_mask |= std::uint64_t{1} << i;
    for (std::size_t i : p.z.ones()) z_mask |= std::uint64_t{1} << i;

    // P|b⟩ = i^phase (−1)^{|z∧b|} |b ⊕ x⟩ with X applied after Z.
    Complex sum = 0.0;
    for (std::uint64_t b = 0; b < amps_.size(); b++) {
        double sign = (std::popcount(b & z_mask) % 2 == 0) ? 1.0 : -1.0;
        sum += std::conj(amps_[b ^ x_mask]) * sign * amps_[b];
    }
    static const Complex kIPower[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kIPower[p.phase_exp % 4] * sum;
}

std::vector<double> ClusterStatevector::measurement_cdf(const MeasurementPattern& pattern) const {
    if (pattern.num_sites() != num_sites_) throw std::invalid_argument("pattern size mismatch");
    std::vector<Complex> rotated = amps_;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // Rotate each site so its measurement basis becomes Z: X needs H,
    // Y needs H·S†, Z needs nothing.
    const Complex h[2][2] = {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}};
    const Complex hsdag[2][2] = {{inv_sqrt2, Complex(0, -inv_sqrt2)},
                                 {inv_sqrt2, Complex(0, inv_sqrt2)}};
    for (std::size_t q = 0; q < num_sites_; q++) {
        switch (pattern.resolved_at(q)) {
            case MeasBasis::X: apply_single_qubit(rotated, q, h); break;
            case MeasBasis::Y: apply_single_qubit(rotated, q, hsdag); break;
            default: break;
        }
    }
    std::vector<double> cdf(rotated.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < rotated.size(); b++) {
        acc += std::norm(rotated[b]);
        cdf[b] = acc;
    }
    cdf.back() = 1.0;  // guard against accumulated rounding
    return cdf;
}

}  // namespace stabgrid
