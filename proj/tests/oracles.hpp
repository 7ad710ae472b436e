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

// Test-only reference implementations, deliberately naive and kept separate
// from the library's bit-packed code paths so the two can check each other.

#ifndef STABGRID_TESTS_ORACLES_HPP
#define STABGRID_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stabgrid/gf2.hpp"
#include "stabgrid/lattice.hpp"

namespace oracles {

using DenseMatrix = std::vector<std::vector<int>>;

inline DenseMatrix dense_from(const stabgrid::Lattice& lattice) {
    std::size_t n = lattice.num_sites();
    DenseMatrix a(n, std::vector<int>(n, 0));
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = 0; k < n; k++) a[j][k] = lattice.adjacent(j, k) ? 1 : 0;
    }
    return a;
}

// Plain row-reduction over GF(2) on int matrices.
inline std::size_t dense_rank(DenseMatrix m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; c++) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; i++) {
            if (m[i][c]) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; i++) {
            if (i != r && m[i][c]) {
                for (std::size_t k = 0; k < cols; k++) m[i][k] ^= m[r][k];
            }
        }
        r++;
    }
    return r;
}

inline std::size_t dense_nullity(const DenseMatrix& m) {
    if (m.empty()) return 0;
    return m[0].size() - dense_rank(m);
}

// Direct neighbor-sum check of the kernel condition at every site.
inline bool in_kernel(const stabgrid::Lattice& lattice, const stabgrid::gf2::BitVec& v) {
    std::size_t n = lattice.num_sites();
    for (std::size_t s = 0; s < n; s++) {
        int sum = 0;
        for (std::size_t t = 0; t < n; t++) {
            if (lattice.adjacent(s, t) && v.get(t)) sum ^= 1;
        }
        if (sum) return false;
    }
    return true;
}

// Brute-force penalty: count adjacent ordered pairs (X-or-Y site, Z-or-Y
// site) from the letters string, weighting by the squared coupling.
inline double pair_count_penalty(const std::string& letters, const stabgrid::Lattice& lattice) {
    double total = 0.0;
    std::size_t n = letters.size();
    for (std::size_t j = 0; j < n; j++) {
        bool x_type = letters[j] == 'X' || letters[j] == 'Y';
        if (!x_type) continue;
        for (std::size_t k = 0; k < n; k++) {
            bool z_type = letters[k] == 'Z' || letters[k] == 'Y';
            if (!z_type) continue;
            double w = lattice.weight(j, k);
            total += w * w;
        }
    }
    return total;
}

// Random non-singular binary matrix, rejection sampled.
inline stabgrid::gf2::BitMatrix random_nonsingular(std::size_t n, std::mt19937_64& rng) {
    while (true) {
        stabgrid::gf2::BitMatrix m(n, n);
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) m.set(r, c, (rng() & 1u) != 0);
        }
        if (m.nonsingular()) return m;
    }
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; i++) perm[i] = i;
    for (std::size_t i = n; i > 1; i--) {
        std::size_t j = rng() % i;
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

}  // namespace oracles

#endif
