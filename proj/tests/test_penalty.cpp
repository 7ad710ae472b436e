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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stabgrid/hctf.hpp"
#include "stabgrid/penalty.hpp"

using namespace stabgrid;

TEST_CASE("per-stabilizer penalties, binary lattices") {
    auto g33 = make_grid(3, 3);
    auto canonical = canonical_set(g33);
    CHECK(stabilizer_penalty(canonical.ops[4], *g33) == 4);  // center = its degree

    auto g23 = make_grid(2, 3);
    auto set = canonical_set(g23);
    PauliOperator s12 = multiply(set.ops[0], set.ops[1]);  // +YYZZZI
    CHECK(stabilizer_penalty(s12, *g23) == 5);

    auto diag = lift_to_operator(XPattern{gf2::BitVec::from_indices(9, {0, 4, 8}), {}}, canonical);
    CHECK(stabilizer_penalty(diag, *g33) == 0);  // x_only

    CHECK_THROWS_AS(stabilizer_penalty(PauliOperator::identity(4), *g33), std::invalid_argument);
}

TEST_CASE("penalty equals the brute-force adjacent pair count") {
    std::mt19937_64 rng(5);
    auto lattice = make_grid(3, 4);
    auto elements = enumerate_group(canonical_set(lattice));
    for (int trial = 0; trial < 200; trial++) {
        const auto& op = elements[rng() % elements.size()];
        std::string letters;
        for (std::size_t q = 0; q < op.num_sites(); q++) letters.push_back(op.letter_at(q));
        CHECK(stabilizer_penalty(op, *lattice) ==
              doctest::Approx(oracles::pair_count_penalty(letters, *lattice)));
    }
}

TEST_CASE("set totals") {
    auto g33 = make_grid(3, 3);
    auto breakdown = total_penalty(canonical_set(g33));
    CHECK(breakdown.total == 24);

    auto g23 = make_grid(2, 3);
    CHECK(total_penalty(canonical_set(g23)).total == 14);  // sum of degrees

    // any set of HCTF operators scores zero
    auto canonical = canonical_set(g33);
    StabilizerSet hctfs;
    hctfs.lattice = g33;
    for (const auto& pattern : kernel_basis(*g33)) {
        hctfs.ops.push_back(lift_to_operator(pattern, canonical));
    }
    CHECK(total_penalty(hctfs).total == 0);
}

TEST_CASE("breakdown bookkeeping is consistent") {
    auto g = make_grid(2, 3);
    auto set = canonical_set(g);
    auto breakdown = total_penalty(set);
    double sum = 0;
    for (double p : breakdown.per_stabilizer) {
        sum += p;
        CHECK(p == std::floor(p));  // binary lattice: integers
    }
    CHECK(sum == breakdown.total);

    double edge_sum = 0;
    for (const auto& [edge, value] : breakdown.per_edge) edge_sum += value;
    CHECK(edge_sum == doctest::Approx(breakdown.total));
}

TEST_CASE("canonical penalty equals vertex degree on every shape") {
    for (const auto& lattice : {make_grid(4, 3), make_tri_fixed(4, 3), make_triangle(5),
                                make_path(6)}) {
        auto set = canonical_set(lattice);
        for (std::size_t a = 0; a < lattice->num_sites(); a++) {
            CHECK(stabilizer_penalty(set.ops[a], *lattice) ==
                  static_cast<double>(lattice->degree(a)));
        }
        CHECK(total_penalty(set).total == static_cast<double>(2 * lattice->edge_count()));
    }
}

TEST_CASE("relabeling sites leaves penalties unchanged") {
    auto g = make_grid(3, 3);
    auto set = canonical_set(g);
    std::size_t n = g->num_sites();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; trial++) {
        auto perm = oracles::random_permutation(n, rng);
        std::vector<double> weights(n * n, 0.0);
        for (std::size_t j = 0; j < n; j++) {
            for (std::size_t k = 0; k < n; k++) weights[perm[j] * n + perm[k]] = g->weight(j, k);
        }
        auto relabeled = make_custom(n, weights);
        for (const auto& op : set.ops) {
            gf2::BitVec x(n), z(n);
            for (std::size_t i : op.x.ones()) x.set(perm[i], true);
            for (std::size_t i : op.z.ones()) z.set(perm[i], true);
            PauliOperator moved(x, z, 0);
            CHECK(stabilizer_penalty(moved, *relabeled) == stabilizer_penalty(op, *g));
        }
    }
}

TEST_CASE("penalty is monotone in the weights") {
    std::vector<double> w = {0, 0.4, 0.0, 0.4, 0, 0.7, 0.0, 0.7, 0};
    auto lattice = make_custom(3, w);
    PauliOperator op = pauli_from_text("+ZXZ");
    double before = stabilizer_penalty(op, *lattice);
    CHECK(before == doctest::Approx(0.4 * 0.4 + 0.7 * 0.7));  // pairs (2,1) and (2,3)

    std::vector<double> heavier = {0, 0.9, 0.0, 0.9, 0, 0.7, 0.0, 0.7, 0};
    CHECK(stabilizer_penalty(op, *make_custom(3, heavier)) > before);
}

TEST_CASE("modified 4-qubit connectivity drops the out-of-range pair") {
    // Edges 1-2, 2-4, 3-4 only: the 2-3 coupling is beyond cross-talk range.
    std::vector<double> w = {
        0, 1, 0, 0,
        1, 0, 0, 1,
        0, 0, 0, 1,
        0, 1, 1, 0};
    auto lattice = make_custom(4, w);
    auto set = canonical_set(lattice);
    CHECK(to_text(set.ops[1]) == "+ZXIZ");
    CHECK(stabilizer_penalty(set.ops[1], *lattice) == 2);

    // The same connectivity at reduced coupling scores with squared weights.
    std::vector<double> soft = w;
    for (auto& v : soft) v *= 0.5;
    auto softer = make_custom(4, soft);
    CHECK(stabilizer_penalty(set.ops[1], *softer) == doctest::Approx(2 * 0.25));
}

TEST_CASE("adjacent Y-Y pairs count once per direction") {
    // X and Z indicators both fire on a Y site, so a Y-Y edge contributes
    // both ordered pairs.
    auto p2 = make_path(2);
    PauliOperator yy = pauli_from_text("-YY");
    CHECK(stabilizer_penalty(yy, *p2) == 2);
}
