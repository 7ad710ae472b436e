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

#ifndef STABGRID_TABLEAU_HPP
#define STABGRID_TABLEAU_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "stabgrid/gf2.hpp"

namespace stabgrid {

/// Destabilizer/stabilizer tableau in the Aaronson–Gottesman form. Rows
/// 0..n−1 are destabilizers, n..2n−1 stabilizers; row (x,z,r) encodes
/// (−1)^r · ∏ P_q with P_q read from the (x_q,z_q) pair (11 = Y).
class StabilizerTableau {
  public:
    explicit StabilizerTableau(std::size_t num_qubits);

    std::size_t num_qubits() const { return n_; }

    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_s_dagger(std::size_t q);
    void apply_cz(std::size_t a, std::size_t b);

    /// Measures qubit q in the Z basis, collapsing the state. `random_bit`
    /// supplies the outcome when it is not determined. Returns 0 or 1.
    int measure_z(std::size_t q, const std::function<int()>& random_bit);

  private:
    void rowsum(std::size_t target, std::size_t source);

    std::size_t n_;
    std::vector<gf2::BitVec> x_;  // 2n rows
    std::vector<gf2::BitVec> z_;
    std::vector<std::uint8_t> r_;  // sign bit per row
};

}  // namespace stabgrid

#endif
