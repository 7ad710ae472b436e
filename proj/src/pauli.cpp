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

#include "stabgrid/pauli.hpp"

#include <stdexcept>

namespace stabgrid {

PauliOperator::PauliOperator(gf2::BitVec x_bits, gf2::BitVec z_bits, std::uint8_t phase)
    : x(std::move(x_bits)), z(std::move(z_bits)), phase_exp(phase % 4) {
    if (x.size() != z.size()) throw std::invalid_argument("x and z bit vectors must have equal length");
}

PauliOperator PauliOperator::identity(std::size_t num_sites) {
    return PauliOperator(gf2::BitVec(num_sites), gf2::BitVec(num_sites), 0);
}

bool PauliOperator::is_hermitian() const {
    return phase_exp % 2 == gf2::and_count(x, z) % 2;
}

char PauliOperator::letter_at(std::size_t site) const {
    bool xb = x.get(site), zb = z.get(site);
    if (xb && zb) return 'Y';
    if (xb) return 'X';
    if (zb) return 'Z';
    return 'I';
}

PauliOperator multiply(const PauliOperator& lhs, const PauliOperator& rhs) {
    if (lhs.num_sites() != rhs.num_sites()) {
        throw std::invalid_argument("operator length mismatch");
    }
    std::size_t reorders = gf2::and_count(lhs.z, rhs.x);  // Z·X = i²·X·Z per site
    auto phase = static_cast<std::uint8_t>((lhs.phase_exp + rhs.phase_exp + 2 * (reorders % 2)) % 4);
    return PauliOperator(lhs.x ^ rhs.x, lhs.z ^ rhs.z, phase);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    return (gf2::and_count(p.x, q.z) + gf2::and_count(p.z, q.x)) % 2 == 0;
}

SupportStats support_stats(const PauliOperator& p) {
    SupportStats s;
    s.weight = (p.x ^ p.z ^ (p.x & p.z)).count();  // popcount(x | z)
    s.weight_parity = static_cast<int>(s.weight % 2);
    s.x_only = p.z.none();
    return s;
}

int rendered_sign(const PauliOperator& p) {
    if (!p.is_hermitian()) throw std::invalid_argument("rendered_sign requires a Hermitian operator");
    // i^phase_exp · (XZ)^k = i^phase_exp · (−i)^k · Y^k with k = popcount(x & z).
    std::size_t k = gf2::and_count(p.x, p.z);
    return ((p.phase_exp + 4 - k % 4) % 4) == 0 ? +1 : -1;
}

std::string to_text(const PauliOperator& p) {
    std::string s;
    s.reserve(p.num_sites() + 1);
    s.push_back(rendered_sign(p) > 0 ? '+' : '-');
    for (std::size_t q = 0; q < p.num_sites(); q++) s.push_back(p.letter_at(q));
    return s;
}

PauliOperator pauli_from_text(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty operator text");
    int sign = +1;
    if (text.front() == '+' || text.front() == '-') {
        sign = text.front() == '-' ? -1 : +1;
        text.remove_prefix(1);
    }
    gf2::BitVec x(text.size());
    gf2::BitVec z(text.size());
    std::size_t y_count = 0;
    for (std::size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I': break;
            case 'X': x.set(q, true); break;
            case 'Y': x.set(q, true); z.set(q, true); y_count++; break;
            case 'Z': z.set(q, true); break;
            default: throw std::invalid_argument("operator text must use I, X, Y, Z");
        }
    }
    // sign · Y^k = sign · i^k · (XZ)^k, so phase_exp = k + 2·[sign<0].
    auto phase = static_cast<std::uint8_t>((y_count + (sign < 0 ? 2 : 0)) % 4);
    return PauliOperator(std::move(x), std::move(z), phase);
}

}  // namespace stabgrid
