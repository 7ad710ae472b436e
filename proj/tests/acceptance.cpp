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

// End-to-end checks, one per line, with the runtime budget enforced.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stabgrid/estimator.hpp"
#include "stabgrid/hctf.hpp"
#include "stabgrid/optimizer.hpp"
#include "stabgrid/penalty.hpp"
#include "stabgrid/planner.hpp"

using namespace stabgrid;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += message;
        }
    }
    void note(const std::string& message) {
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
};

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int product_over_support(const ShotTable& table, std::uint32_t shot, const PauliOperator& op) {
    int product = rendered_sign(op);
    for (std::size_t q : (op.x ^ op.z ^ (op.x & op.z)).ones()) {
        product *= table.at(shot, static_cast<std::uint32_t>(q));
    }
    return product;
}

// --- criterion bodies ---------------------------------------------------

void canonical_penalty(Check& c) {
    auto lattice = make_grid(3, 3);
    auto set = canonical_set(lattice);
    auto start = Clock::now();
    auto breakdown = total_penalty(set);
    double elapsed = ms_since(start);
    c.require(breakdown.total == 24.0, "expected total 24, got " + std::to_string(breakdown.total));
    c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " ms (limit 1 ms)");
    c.note("total=24 in " + std::to_string(elapsed) + " ms");
}

void penalty_reduction(Check& c) {
    auto start = Clock::now();
    auto basis = min_penalty_basis_exact(make_grid(3, 3));
    double elapsed = ms_since(start);
    c.require(basis.set.size() == 9, "basis size != 9");
    c.require(gf2_rank(basis.set) == 9, "rank != 9");
    c.require(in_canonical_group(basis.set), "basis leaves the canonical group");
    c.require(basis.total_penalty <= 13.0,
              "total " + std::to_string(basis.total_penalty) + " exceeds 13");
    c.require(elapsed < 1000.0, "took " + std::to_string(elapsed) + " ms (limit 1 s)");
    c.note("exact optimum=" + std::to_string(static_cast<int>(basis.total_penalty)));
}

void hctf_counts(Check& c) {
    auto start = Clock::now();
    for (std::size_t n = 2; n <= 8; n++) {
        auto lattice = make_grid(n, n);
        std::size_t dim = kernel_basis(*lattice).size();
        c.require(dim == n, "grid(" + std::to_string(n) + ") kernel dim " + std::to_string(dim));
        c.require(dim == oracles::dense_nullity(oracles::dense_from(*lattice)),
                  "grid(" + std::to_string(n) + ") disagrees with the elimination oracle");
    }
    for (std::size_t r = 1; r <= 9; r++) {
        auto lattice = make_triangle(r);
        std::size_t dim = kernel_basis(*lattice).size();
        c.require(dim == (r + 1) / 2,
                  "triangle(" + std::to_string(r) + ") kernel dim " + std::to_string(dim));
        c.require(dim == oracles::dense_nullity(oracles::dense_from(*lattice)),
                  "triangle(" + std::to_string(r) + ") disagrees with the elimination oracle");
    }
    for (std::size_t n = 2; n <= 9; n++) {
        std::size_t dim = kernel_basis(*make_path(n)).size();
        c.require(dim == (n % 2 == 1 ? 1u : 0u),
                  "path(" + std::to_string(n) + ") kernel dim " + std::to_string(dim));
    }
    double elapsed = ms_since(start);
    c.require(elapsed < 1000.0, "took " + std::to_string(elapsed) + " ms (limit 1 s)");
}

void algorithm1_reproduction(Check& c) {
    auto start = Clock::now();
    const char* expected[3][3] = {
        {"100", "010", "001"}, {"010", "101", "010"}, {"001", "010", "100"}};
    gf2::EchelonBasis independent(9);
    for (std::size_t col = 0; col < 3; col++) {
        gf2::BitVec initial(3);
        initial.set(col, true);
        auto prop = propagate_rectangular(3, initial);
        c.require(prop.terminated && prop.rows.size() == 3,
                  "column " + std::to_string(col + 1) + " did not terminate at height 3");
        if (prop.rows.size() == 3) {
            for (std::size_t r = 0; r < 3; r++) {
                c.require(prop.rows[r].to_string() == expected[col][r],
                          "column " + std::to_string(col + 1) + " row " + std::to_string(r + 1) +
                              " is " + prop.rows[r].to_string());
            }
        }
        auto pattern = stack_rows(prop, 3);
        c.require(oracles::in_kernel(*make_grid(3, 3), pattern.member),
                  "pattern " + std::to_string(col + 1) + " is not in the kernel");
        c.require(independent.try_insert(pattern.member),
                  "pattern " + std::to_string(col + 1) + " is dependent");
    }
    double elapsed = ms_since(start);
    c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " ms (limit 1 ms)");
}

void algorithm2_soundness(Check& c) {
    auto start = Clock::now();
    for (std::size_t width = 2; width <= 6; width++) {
        // every nonzero initial row
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << width); bits++) {
            gf2::BitVec initial(width);
            for (std::size_t i = 0; i < width; i++) {
                if ((bits >> i) & 1u) initial.set(i, true);
            }
            auto prop = propagate_triangular(width, initial);
            if (!prop.terminated || prop.rows.empty()) continue;
            auto pattern = stack_rows(prop, width);
            c.require(oracles::in_kernel(*make_tri_fixed(prop.rows.size(), width), pattern.member),
                      "width " + std::to_string(width) + " initial " + initial.to_string() +
                          " escapes the kernel");
        }
        // single-X initials: n independent HCTFs on a common lattice
        gf2::EchelonBasis independent(width * width);
        for (std::size_t col = 0; col < width; col++) {
            gf2::BitVec initial(width);
            initial.set(col, true);
            auto prop = propagate_triangular(width, initial);
            c.require(prop.terminated, "width " + std::to_string(width) + " column " +
                                           std::to_string(col + 1) + " did not terminate");
            c.require(prop.rows.size() == width,
                      "width " + std::to_string(width) + " column " + std::to_string(col + 1) +
                          " height " + std::to_string(prop.rows.size()));
            if (prop.rows.size() == width) {
                c.require(independent.try_insert(stack_rows(prop, width).member),
                          "width " + std::to_string(width) + " column " +
                              std::to_string(col + 1) + " is dependent");
            }
        }
        c.require(independent.size() == width,
                  "width " + std::to_string(width) + " yields fewer than n HCTFs");
    }
    double elapsed = ms_since(start);
    c.require(elapsed < 1000.0, "took " + std::to_string(elapsed) + " ms (limit 1 s)");
}

void extended_tilings(Check& c) {
    auto start = Clock::now();
    XPattern diag{gf2::BitVec::from_indices(9, {0, 4, 8}), {3, 3, 3}};
    struct Case {
        std::size_t k, l;
    };
    for (Case kase : {Case{1, 2}, Case{2, 1}, Case{2, 2}}) {
        std::size_t rows = kase.k * 3 + (kase.k - 1);
        std::size_t cols = kase.l * 3 + (kase.l - 1);
        try {
            auto tiled = extended_tiling(diag, kase.k, kase.l);
            c.require(oracles::in_kernel(*make_grid(rows, cols), tiled.member),
                      "tiling " + std::to_string(kase.k) + "x" + std::to_string(kase.l) +
                          " left the kernel");
        } catch (const std::exception& e) {
            c.require(false, std::string("tiling failed: ") + e.what());
        }
    }
    // without the mirror flip the (1,2) case must fail
    gf2::BitVec unflipped(21);
    for (std::size_t r = 0; r < 3; r++) {
        unflipped.set(r * 7 + r, true);
        unflipped.set(r * 7 + 4 + r, true);
    }
    c.require(!oracles::in_kernel(*make_grid(3, 7), unflipped),
              "unflipped 1x2 tiling unexpectedly stayed in the kernel");
    double elapsed = ms_since(start);
    c.require(elapsed < 1000.0, "took " + std::to_string(elapsed) + " ms (limit 1 s)");
}

void equivalent_set_example(Check& c) {
    auto start = Clock::now();
    auto lattice = make_grid(2, 3);
    auto set = canonical_set(lattice);
    gf2::BitMatrix m(6, 6);
    auto pin = [&m](std::size_t r, std::initializer_list<std::size_t> cols) {
        for (std::size_t col : cols) m.set(r, col, true);
    };
    pin(0, {0, 1});
    pin(1, {1});
    pin(2, {2, 3});
    pin(3, {3});
    pin(4, {4, 5});
    pin(5, {5});
    auto transformed = transform_set(set, m);

    const char* expected[6] = {"+YYZZZI", "+ZXZIZI", "+ZZXXZZ",
                               "+ZIIXZI", "+IZZZYY", "+IIZIZX"};
    for (std::size_t i = 0; i < 6; i++) {
        c.require(to_text(transformed.ops[i]) == expected[i],
                  "element " + std::to_string(i + 1) + " is " + to_text(transformed.ops[i]));
    }
    for (std::size_t i = 0; i < 6; i++) {
        double value = cluster_expectation_oracle(*lattice, transformed.ops[i]);
        c.require(std::abs(value - 1.0) < 1e-10,
                  "element " + std::to_string(i + 1) + " expectation " + std::to_string(value));
    }
    double elapsed = ms_since(start);
    c.require(elapsed < 1000.0, "took " + std::to_string(elapsed) + " ms (limit 1 s)");
}

StabilizerSet canonical_in_checkerboard_order(const LatticePtr& lattice) {
    auto set = canonical_set(lattice);
    std::size_t cols = lattice->shape_params()[1];
    StabilizerSet ordered;
    ordered.lattice = lattice;
    for (int color = 0; color < 2; color++) {
        for (std::size_t s = 0; s < set.size(); s++) {
            if ((s / cols + s % cols) % 2 == static_cast<std::size_t>(color)) {
                ordered.ops.push_back(set.ops[s]);
            }
        }
    }
    return ordered;
}

void planner_counts(Check& c) {
    auto start = Clock::now();
    auto lattice = make_grid(3, 3);
    auto ordered = canonical_in_checkerboard_order(lattice);
    auto canonical_plan = plan_patterns(ordered);
    double canonical_total = 0;
    for (const auto& p : canonical_plan) canonical_total += pattern_penalty(p, *lattice);
    c.require(canonical_plan.size() == 2,
              "canonical plan used " + std::to_string(canonical_plan.size()) + " patterns");
    c.require(canonical_total == 24.0,
              "canonical pattern total " + std::to_string(canonical_total));

    auto basis = min_penalty_basis_exact(lattice);
    auto optimized_plan = plan_patterns(basis.set);
    double optimized_total = 0;
    for (const auto& p : optimized_plan) optimized_total += pattern_penalty(p, *lattice);
    c.require(optimized_plan.size() >= 3,
              "optimized plan used " + std::to_string(optimized_plan.size()) + " patterns");
    c.require(optimized_total < 24.0,
              "optimized pattern total " + std::to_string(optimized_total));
    c.note("optimized plan: " + std::to_string(optimized_plan.size()) + " patterns, total=" +
           std::to_string(static_cast<int>(optimized_total)) + " (reference value 15)");
    double elapsed = ms_since(start);
    c.require(elapsed < 1000.0, "took " + std::to_string(elapsed) + " ms (limit 1 s)");
}

void noiseless_pipeline(Check& c) {
    auto start = Clock::now();
    auto lattice = make_grid(3, 3);
    auto basis = min_penalty_basis_exact(lattice);
    auto plan = plan_patterns(basis.set);
    NoiseModel noiseless;
    noiseless.seed = 2026;
    std::vector<ShotTable> tables;
    for (std::size_t i = 0; i < plan.size(); i++) {
        noiseless.seed = 2026 + i;
        tables.push_back(simulate_pattern(*lattice, plan[i], 10000, noiseless));
    }
    auto report = estimate_set(tables, basis.set, plan, VacancyPolicy::Minus);
    c.require(report.fidelity_bound == 1.0,
              "fidelity bound " + std::to_string(report.fidelity_bound));
    for (std::size_t i = 0; i < basis.set.size(); i++) {
        const auto& table = tables[report.per_stabilizer[i].pattern_index];
        for (std::uint32_t s = 0; s < table.shots; s++) {
            if (product_over_support(table, s, basis.set.ops[i]) != 1) {
                c.require(false, "stabilizer " + std::to_string(i + 1) + " shot " +
                                     std::to_string(s) + " product != +1");
                break;
            }
        }
    }
    double elapsed = ms_since(start);
    c.require(elapsed < 5000.0, "took " + std::to_string(elapsed) + " ms (limit 5 s)");
}

void vacancy_parity(Check& c) {
    auto start = Clock::now();
    auto lattice = make_grid(3, 3);
    auto canonical = canonical_set(lattice);
    StabilizerSet diag_set;
    diag_set.lattice = lattice;
    diag_set.ops.push_back(
        lift_to_operator(XPattern{gf2::BitVec::from_indices(9, {0, 4, 8}), {}}, canonical));

    MeasurementPattern all_x;
    all_x.basis.assign(9, MeasBasis::X);
    NoiseModel vacant;
    vacant.p_vacancy = 1.0;
    vacant.seed = 5;
    ShotTable table = simulate_pattern(*lattice, all_x, 1000, vacant);

    auto minus = estimate_set({table}, diag_set, {all_x}, VacancyPolicy::Minus);
    c.require(minus.per_stabilizer[0].mean == -1.0,
              "minus policy gave mean " + std::to_string(minus.per_stabilizer[0].mean));
    auto plus = estimate_set({table}, diag_set, {all_x}, VacancyPolicy::Plus);
    c.require(plus.per_stabilizer[0].mean == 1.0,
              "plus policy gave mean " + std::to_string(plus.per_stabilizer[0].mean));
    double elapsed = ms_since(start);
    c.require(elapsed < 1000.0, "took " + std::to_string(elapsed) + " ms (limit 1 s)");
}

double pipeline_bound(const LatticePtr& lattice, const StabilizerSet& set,
                      const std::vector<MeasurementPattern>& plan, double p_flip,
                      std::uint64_t seed) {
    NoiseModel noise;
    noise.p_flip = p_flip;
    std::vector<ShotTable> tables;
    for (std::size_t i = 0; i < plan.size(); i++) {
        noise.seed = seed * 1000 + i;
        tables.push_back(simulate_pattern(*lattice, plan[i], 10000, noise));
    }
    return estimate_set(tables, set, plan, VacancyPolicy::Minus).fidelity_bound;
}

void noise_monotonicity(Check& c) {
    auto start = Clock::now();
    auto lattice = make_grid(3, 3);
    auto ordered = canonical_in_checkerboard_order(lattice);
    auto canonical_plan = plan_patterns(ordered);
    auto basis = min_penalty_basis_exact(lattice);
    auto optimized_plan = plan_patterns(basis.set);

    int wins = 0;
    for (std::uint64_t seed = 1; seed <= 30; seed++) {
        double canonical_bound =
            pipeline_bound(lattice, ordered, canonical_plan, 0.05, seed);
        double optimized_bound =
            pipeline_bound(lattice, basis.set, optimized_plan, 0.05, seed + 500);
        if (optimized_bound >= canonical_bound) wins++;
    }
    c.require(wins >= 27, "optimized bound won only " + std::to_string(wins) + "/30 seeds");
    c.note(std::to_string(wins) + "/30 seeds favored the optimized set");
    double elapsed = ms_since(start);
    c.require(elapsed < 120000.0, "took " + std::to_string(elapsed) + " ms (limit 2 min)");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Check&)> body;
    };
    std::vector<Criterion> criteria = {
        {1, "canonical penalty 24 on grid(3,3)", canonical_penalty},
        {2, "exact basis total <= 13 on grid(3,3)", penalty_reduction},
        {3, "kernel dimension counts", hctf_counts},
        {4, "rectangular propagation building blocks", algorithm1_reproduction},
        {5, "triangular propagation soundness", algorithm2_soundness},
        {6, "extended tilings with mirror flips", extended_tilings},
        {7, "equivalent-set worked example", equivalent_set_example},
        {8, "planner pattern counts and totals", planner_counts},
        {9, "noiseless pipeline bound = 1", noiseless_pipeline},
        {10, "vacancy parity under the minus policy", vacancy_parity},
        {11, "noisy bound favors the optimized set", noise_monotonicity},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        Check check;
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        if (!check.ok) failures++;
        std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2)
                  << criterion.id << "  " << criterion.name;
        if (!check.detail.empty()) std::cout << "  [" << check.detail << "]";
        std::cout << "\n";
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
