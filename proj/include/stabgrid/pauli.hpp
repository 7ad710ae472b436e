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

#ifndef STABGRID_PAULI_HPP
#define STABGRID_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "stabgrid/gf2.hpp"

namespace stabgrid {

/// Multi-qubit Pauli in binary symplectic form.
///
/// The operator is i^phase_exp · ∏_q X_q^{x_q} Z_q^{z_q} with the X factor
/// written before the Z factor on every qubit. A site with x=z=1 is a Y up
/// to the tracked phase. Hermitian elements satisfy
/// phase_exp ≡ popcount(x & z) (mod 2).
struct PauliOperator {
    gf2::BitVec x;
    gf2::BitVec z;
    std::uint8_t phase_exp = 0;  // power of i, mod 4

    PauliOperator() = default;
    PauliOperator(gf2::BitVec x_bits, gf2::BitVec z_bits, std::uint8_t phase = 0);

    static PauliOperator identity(std::size_t num_sites);

    std::size_t num_sites() const { return x.size(); }
    bool is_identity() const { return x.none() && z.none() && phase_exp == 0; }
    bool is_hermitian() const;
    bool x_only() const { return z.none(); }

    /// Pauli letter at a site: 'I', 'X', 'Y' or 'Z'.
    char letter_at(std::size_t site) const;

    bool operator==(const PauliOperator& other) const = default;
};

/// Product with phase tracking: each site where lhs has a Z and rhs has an X
/// contributes i² from the reorder.
PauliOperator multiply(const PauliOperator& lhs, const PauliOperator& rhs);

bool commutes(const PauliOperator& p, const PauliOperator& q);

struct SupportStats {
    std::size_t weight = 0;  // popcount(x | z)
    int weight_parity = 0;
    bool x_only = false;
};
SupportStats support_stats(const PauliOperator& p);

/// ±1 prefactor of the {I,X,Y,Z}-word rendering of a Hermitian operator.
int rendered_sign(const PauliOperator& p);

/// Text form, e.g. "+XZIZII" (site 1 leftmost).
std::string to_text(const PauliOperator& p);
PauliOperator pauli_from_text(std::string_view text);

}  // namespace stabgrid

#endif
