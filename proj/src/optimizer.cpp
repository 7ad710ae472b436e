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

#include "stabgrid/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "stabgrid/hctf.hpp"
#include "stabgrid/penalty.hpp"

namespace stabgrid {

namespace {

// Lexicographic order on the bit sequence b0 b1 ... b31 packed into a word.
bool lex_less_u32(std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    return (a & low) == 0;
}

bool scored_less(const ScoredElement& a, const ScoredElement& b) {
    if (a.penalty != b.penalty) return a.penalty < b.penalty;
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.mask != b.mask) return lex_less_u32(a.mask, b.mask);
    return lex_less_u32(a.z_bits, b.z_bits);
}

// Packed adjacency info for lattices small enough for the exact path.
struct PackedLattice {
    std::size_t n;
    std::vector<std::uint32_t> rows;      // binarized adjacency rows
    std::vector<double> weights;          // dense, only consulted when weighted
    bool binary;

    explicit PackedLattice(const Lattice& lattice)
        : n(lattice.num_sites()), weights(lattice.adjacency()), binary(lattice.is_binary()) {
        rows.assign(n, 0);
        for (std::size_t j = 0; j < n; j++) {
            for (std::size_t k : lattice.neighbor_bits(j).ones()) {
                rows[j] |= std::uint32_t{1} << k;
            }
        }
    }

    double penalty(std::uint32_t x_bits, std::uint32_t z_bits) const {
        if (binary) {
            std::uint32_t x = x_bits;
            std::size_t total = 0;
            while (x) {
                auto j = static_cast<std::size_t>(std::countr_zero(x));
                total += static_cast<std::size_t>(std::popcount(rows[j] & z_bits));
                x &= x - 1;
            }
            return static_cast<double>(total);
        }
        double total = 0.0;
        std::uint32_t x = x_bits;
        while (x) {
            auto j = static_cast<std::size_t>(std::countr_zero(x));
            std::uint32_t zr = rows[j] & z_bits;
            while (zr) {
                auto k = static_cast<std::size_t>(std::countr_zero(zr));
                double w = weights[j * n + k];
                total += w * w;
                zr &= zr - 1;
            }
            x &= x - 1;
        }
        return total;
    }
};

void score_range(const PackedLattice& packed, std::uint64_t lo, std::uint64_t hi,
                 std::vector<ScoredElement>& out) {
    // Walk indices lo..hi−1 of the Gray sequence; z follows by XORing the
    // adjacency row of the toggled generator. Index i stores to out[i−1]
    // (the identity at index 0 is skipped).
    std::uint32_t mask = 0, z = 0;
    std::uint64_t gray_lo = lo ^ (lo >> 1);
    for (std::uint32_t bits = static_cast<std::uint32_t>(gray_lo); bits;) {
        auto k = static_cast<std::size_t>(std::countr_zero(bits));
        mask |= std::uint32_t{1} << k;
        z ^= packed.rows[k];
        bits &= bits - 1;
    }
    for (std::uint64_t i = lo; i < hi; i++) {
        if (i > lo) {
            std::uint64_t flip = (i ^ (i >> 1)) ^ ((i - 1) ^ ((i - 1) >> 1));
            auto k = static_cast<std::size_t>(std::countr_zero(flip));
            mask ^= std::uint32_t{1} << k;
            z ^= packed.rows[k];
        }
        if (i == 0) continue;
        ScoredElement& e = out[i - 1];
        e.mask = mask;
        e.z_bits = z;
        e.penalty = packed.penalty(mask, z);
        e.weight = static_cast<std::uint32_t>(std::popcount(mask | z));
    }
}

gf2::BitVec symplectic_from_bits(std::size_t n, std::uint32_t x_bits, std::uint32_t z_bits) {
    gf2::BitVec row(2 * n);
    for (std::size_t i = 0; i < n; i++) {
        if ((x_bits >> i) & 1u) row.set(i, true);
        if ((z_bits >> i) & 1u) row.set(n + i, true);
    }
    return row;
}

}  // namespace

std::vector<ScoredElement> score_group_elements(const Lattice& lattice, Exec exec) {
    std::size_t n = lattice.num_sites();
    if (n > kExactSiteLimit) {
        throw std::invalid_argument("full enumeration is limited to " +
                                    std::to_string(kExactSiteLimit) +
                                    " sites; use min_penalty_basis_heuristic");
    }
    PackedLattice packed(lattice);
    std::uint64_t count = (std::uint64_t{1} << n) - 1;
    std::vector<ScoredElement> out(count);

    if (exec == Exec::OpenMP && count >= 1024) {
        constexpr std::uint64_t kChunk = 1 << 12;
        auto chunks = static_cast<long long>((count + kChunk) / kChunk);
#pragma omp parallel for schedule(static)
        for (long long c = 0; c < chunks; c++) {
            std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
            std::uint64_t hi = std::min(lo + kChunk, count + 1);
            score_range(packed, lo, hi, out);
        }
    } else {
        score_range(packed, 0, count + 1, out);
    }
    return out;
}

void sort_scored(std::vector<ScoredElement>& elements) {
    std::sort(elements.begin(), elements.end(), scored_less);
}

OptimizedBasis min_penalty_basis_exact(LatticePtr lattice, Exec exec) {
    std::size_t n = lattice->num_sites();
    std::vector<ScoredElement> elements = score_group_elements(*lattice, exec);
    sort_scored(elements);

    StabilizerSet canonical = canonical_set(lattice);
    GroupEnumerator enumerator(canonical);

    OptimizedBasis result;
    result.mode = OptimizerMode::Exact;
    result.set.lattice = lattice;
    gf2::EchelonBasis independent(2 * n);
    for (const ScoredElement& e : elements) {
        if (!independent.try_insert(symplectic_from_bits(n, e.mask, e.z_bits))) continue;
        result.set.ops.push_back(enumerator.element_for_mask(e.mask));
        result.certificate.push_back(e.penalty);
        result.total_penalty += e.penalty;
        if (result.set.ops.size() == n) break;
    }
    return result;
}

OptimizedBasis min_penalty_basis_heuristic(LatticePtr lattice, std::size_t max_product_degree,
                                           Exec exec) {
    if (max_product_degree == 0) throw std::invalid_argument("max_product_degree must be >= 1");
    std::size_t n = lattice->num_sites();
    StabilizerSet canonical = canonical_set(lattice);

    // BFS distances, needed for the locality filter on products.
    std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, n + 1));
    for (std::size_t s = 0; s < n; s++) {
        dist[s][s] = 0;
        std::vector<std::size_t> frontier{s};
        std::size_t d = 0;
        while (!frontier.empty()) {
            d++;
            std::vector<std::size_t> next;
            for (std::size_t u : frontier) {
                for (std::size_t v : lattice->neighbor_bits(u).ones()) {
                    if (dist[s][v] > n) {
                        dist[s][v] = d;
                        next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    // Candidate generator combinations, as site-index lists.
    std::vector<std::vector<std::size_t>> combos;
    for (std::size_t a = 0; a < n; a++) combos.push_back({a});
    for (const XPattern& pattern : kernel_basis(*lattice)) combos.push_back(pattern.member.ones());
    std::vector<std::size_t> stack;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (stack.size() >= 2) combos.push_back(stack);
        if (stack.size() == max_product_degree) return;
        for (std::size_t next = start; next < n; next++) {
            bool close = true;
            for (std::size_t prev : stack) {
                if (dist[prev][next] > 2) {
                    close = false;
                    break;
                }
            }
            if (!close) continue;
            stack.push_back(next);
            self(self, next + 1);
            stack.pop_back();
        }
    };
    extend(extend, 0);

    struct Candidate {
        PauliOperator op;
        double penalty;
        std::size_t weight;
    };
    std::vector<Candidate> pool(combos.size());
    auto build = [&](std::size_t i) {
        PauliOperator acc = PauliOperator::identity(n);
        for (std::size_t a : combos[i]) acc = multiply(acc, canonical.ops[a]);
        double pen = stabilizer_penalty(acc, *lattice);
        std::size_t weight = support_stats(acc).weight;
        pool[i] = Candidate{std::move(acc), pen, weight};
    };
    if (exec == Exec::OpenMP) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < static_cast<long long>(combos.size()); i++) {
            build(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < combos.size(); i++) build(i);
    }

    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pool[a].penalty != pool[b].penalty) return pool[a].penalty < pool[b].penalty;
        if (pool[a].weight != pool[b].weight) return pool[a].weight < pool[b].weight;
        int cx = pool[a].op.x.lex_compare(pool[b].op.x);
        if (cx != 0) return cx < 0;
        return pool[a].op.z.lex_compare(pool[b].op.z) < 0;
    });

    OptimizedBasis result;
    result.mode = OptimizerMode::Heuristic;
    result.set.lattice = lattice;
    gf2::EchelonBasis independent(2 * n);
    for (std::size_t i : order) {
        if (!independent.try_insert(symplectic_row(pool[i].op))) continue;
        result.set.ops.push_back(pool[i].op);
        result.certificate.push_back(pool[i].penalty);
        result.total_penalty += pool[i].penalty;
        if (result.set.ops.size() == n) break;
    }
    return result;
}

}  // namespace stabgrid
