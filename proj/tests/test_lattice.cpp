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

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stabgrid/lattice.hpp"

using namespace stabgrid;

TEST_CASE("grid sizes and edge counts") {
    auto g33 = make_grid(3, 3);
    CHECK(g33->num_sites() == 9);
    CHECK(g33->edge_count() == 12);  // rows*(cols-1) + cols*(rows-1)

    auto g25 = make_grid(2, 5);
    CHECK(g25->edge_count() == 2 * 4 + 5 * 1);

    CHECK(make_triangle(5)->num_sites() == 15);
    CHECK(make_path(7)->edge_count() == 6);
}

TEST_CASE("grid(2,3) has exactly the documented edge list") {
    auto g = make_grid(2, 3);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t j = 0; j < 6; j++) {
        for (std::size_t k = j + 1; k < 6; k++) {
            if (g->adjacent(j, k)) edges.insert({j + 1, k + 1});
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> expected = {
        {1, 2}, {2, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {5, 6}};
    CHECK(edges == expected);
}

TEST_CASE("neighbors are sorted and degree-correct") {
    auto g = make_grid(3, 3);
    auto center = neighbors(*g, 4);
    CHECK(center.size() == 4);
    CHECK(std::is_sorted(center.begin(), center.end()));
    CHECK(neighbors(*g, 0).size() == 2);

    auto p = make_path(3);
    auto mid = neighbors(*p, 1);
    REQUIRE(mid.size() == 2);
    CHECK(mid[0].first == 0);
    CHECK(mid[1].first == 2);

    CHECK_THROWS_AS(neighbors(*g, 9), std::out_of_range);
}

TEST_CASE("interior degrees: grid 4, sheared triangular 6") {
    auto g = make_grid(5, 5);
    CHECK(g->degree(12) == 4);  // center of the 5x5

    auto t = make_tri_fixed(5, 5);
    CHECK(t->degree(2 * 5 + 2) == 6);

    // triangle adjacency convention: (i,j) ~ (i,j±1), (i+1,j), (i+1,j+1)
    auto tri = make_triangle(4);
    CHECK(tri->degree(0) == 2);             // apex
    CHECK(tri->degree(1 + 2 + 1) == 6);     // site (2,1), interior of the fan
}

TEST_CASE("adjacency is exactly symmetric for every built-in shape") {
    for (const auto& lattice : {make_grid(3, 4), make_tri_fixed(3, 4), make_triangle(5),
                                make_path(6)}) {
        for (std::size_t j = 0; j < lattice->num_sites(); j++) {
            for (std::size_t k = 0; k < lattice->num_sites(); k++) {
                CHECK(lattice->weight(j, k) == lattice->weight(k, j));
            }
        }
    }
}

TEST_CASE("degree multiset is invariant under site relabeling") {
    auto g = make_grid(3, 4);
    std::size_t n = g->num_sites();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; trial++) {
        auto perm = oracles::random_permutation(n, rng);
        std::vector<double> permuted(n * n, 0.0);
        for (std::size_t j = 0; j < n; j++) {
            for (std::size_t k = 0; k < n; k++) {
                permuted[perm[j] * n + perm[k]] = g->weight(j, k);
            }
        }
        auto relabeled = make_custom(n, permuted);
        std::vector<std::size_t> a, b;
        for (std::size_t s = 0; s < n; s++) {
            a.push_back(g->degree(s));
            b.push_back(relabeled->degree(s));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("construction rejects bad inputs") {
    CHECK_THROWS_AS(make_grid(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
    CHECK_THROWS_AS(make_triangle(0), std::invalid_argument);

    // non-symmetric
    std::vector<double> w = {0, 1, 0, 0};
    CHECK_THROWS_AS(make_custom(2, w), std::invalid_argument);
    // out of range weight
    std::vector<double> big = {0, 1.5, 1.5, 0};
    CHECK_THROWS_AS(make_custom(2, big), std::invalid_argument);
    // nonzero diagonal
    std::vector<double> diag = {1, 0, 0, 0};
    CHECK_THROWS_AS(make_custom(2, diag), std::invalid_argument);
    // duplicate coordinates
    std::vector<double> ok = {0, 1, 1, 0};
    CHECK_THROWS_AS(make_custom(2, ok, {{0.0, 0.0}, {0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("weighted custom lattices store couplings whose square is the influence") {
    std::vector<double> w = {0, 0.5, 0.5, 0};
    auto lattice = make_custom(2, w);
    CHECK_FALSE(lattice->is_binary());
    CHECK(lattice->adjacent(0, 1));
    CHECK(lattice->weight(0, 1) == 0.5);
    CHECK(lattice->binary_adjacency().get(0, 1));
}

TEST_CASE("shorthand grammar") {
    CHECK(lattice_from_shorthand("grid:3x3")->num_sites() == 9);
    CHECK(lattice_from_shorthand("tri:4x2")->num_sites() == 8);  // width 4, 2 rows
    CHECK(lattice_from_shorthand("tri:4x2")->shape_params() == std::vector<std::size_t>{2, 4});
    CHECK(lattice_from_shorthand("triangle:5")->num_sites() == 15);
    CHECK(lattice_from_shorthand("path:6")->shape() == Shape::Path);
    CHECK_THROWS_AS(lattice_from_shorthand("grid:3"), std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_shorthand("blob:3"), std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_shorthand("grid3x3"), std::invalid_argument);
}
