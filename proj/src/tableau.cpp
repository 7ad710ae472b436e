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

#include "stabgrid/tableau.hpp"

#include <bit>

namespace stabgrid {

StabilizerTableau::StabilizerTableau(std::size_t num_qubits)
    : n_(num_qubits),
      x_(2 * num_qubits, gf2::BitVec(num_qubits)),
      z_(2 * num_qubits, gf2::BitVec(num_qubits)),
      r_(2 * num_qubits, 0) {
    for (std::size_t i = 0; i < n_; i++) {
        x_[i].set(i, true);       // destabilizer X_i
        z_[n_ + i].set(i, true);  // stabilizer Z_i
    }
}

void StabilizerTableau::apply_h(std::size_t q) {
    for (std::size_t i = 0; i < 2 * n_; i++) {
        bool xb = x_[i].get(q), zb = z_[i].get(q);
        r_[i] ^= static_cast<std::uint8_t>(xb && zb);
        x_[i].set(q, zb);
        z_[i].set(q, xb);
    }
}

void StabilizerTableau::apply_s(std::size_t q) {
    for (std::size_t i = 0; i < 2 * n_; i++) {
        bool xb = x_[i].get(q), zb = z_[i].get(q);
        r_[i] ^= static_cast<std::uint8_t>(xb && zb);
        z_[i].set(q, xb != zb);
    }
}

void StabilizerTableau::apply_s_dagger(std::size_t q) {
    for (std::size_t i = 0; i < 2 * n_; i++) {
        bool xb = x_[i].get(q), zb = z_[i].get(q);
        r_[i] ^= static_cast<std::uint8_t>(xb && !zb);  // X → −Y, Y → X
        z_[i].set(q, xb != zb);
    }
}

void StabilizerTableau::apply_cz(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < 2 * n_; i++) {
        bool xa = x_[i].get(a), za = z_[i].get(a);
        bool xb = x_[i].get(b), zb = z_[i].get(b);
        r_[i] ^= static_cast<std::uint8_t>(xa && xb && (za != zb));
        z_[i].set(a, za != xb);
        z_[i].set(b, zb != xa);
    }
}

void StabilizerTableau::rowsum(std::size_t target, std::size_t source) {
    // Phase exponent of the row product, mod 4, via the g function of
    // Aaronson–Gottesman evaluated bitwise per word.
    const auto& x1 = x_[source].words();
    const auto& z1 = z_[source].words();
    const auto& x2 = x_[target].words();
    const auto& z2 = z_[target].words();
    long long exponent = 2 * (r_[target] + r_[source]);
    for (std::size_t w = 0; w < x1.size(); w++) {
        std::uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
        std::uint64_t plus = (a & b & ~c & d) | (a & ~b & c & d) | (~a & b & c & ~d);
        std::uint64_t minus = (a & b & c & ~d) | (a & ~b & ~c & d) | (~a & b & c & d);
        exponent += std::popcount(plus);
        exponent -= std::popcount(minus);
    }
    r_[target] = static_cast<std::uint8_t>(((exponent % 4) + 4) % 4 / 2);
    x_[target] ^= x_[source];
    z_[target] ^= z_[source];
}

int StabilizerTableau::measure_z(std::size_t q, const std::function<int()>& random_bit) {
    std::size_t p = 2 * n_;
    for (std::size_t i = n_; i < 2 * n_; i++) {
        if (x_[i].get(q)) {
            p = i;
            break;
        }
    }
    if (p < 2 * n_) {
        // Outcome is random: anticommuting stabilizer found.
        for (std::size_t i = 0; i < 2 * n_; i++) {
            if (i != p && x_[i].get(q)) rowsum(i, p);
        }
        x_[p - n_] = x_[p];
        z_[p - n_] = z_[p];
        r_[p - n_] = r_[p];
        x_[p].clear();
        z_[p].clear();
        z_[p].set(q, true);
        int outcome = random_bit() & 1;
        r_[p] = static_cast<std::uint8_t>(outcome);
        return outcome;
    }
    // Deterministic: accumulate into a scratch row.
    gf2::BitVec sx(n_), sz(n_);
    std::uint8_t sr = 0;
    x_.push_back(std::move(sx));
    z_.push_back(std::move(sz));
    r_.push_back(sr);
    for (std::size_t i = 0; i < n_; i++) {
        if (x_[i].get(q)) rowsum(2 * n_, n_ + i);
    }
    int outcome = r_[2 * n_];
    x_.pop_back();
    z_.pop_back();
    r_.pop_back();
    return outcome;
}

}  // namespace stabgrid
