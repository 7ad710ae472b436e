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

#include "stabgrid/planner.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "stabgrid/penalty.hpp"

namespace stabgrid {

std::vector<MeasBasis> MeasurementPattern::resolved() const {
    std::vector<MeasBasis> out(basis.size());
    for (std::size_t i = 0; i < basis.size(); i++) out[i] = resolved_at(i);
    return out;
}

std::pair<MeasurementPattern, MeasurementPattern> checkerboard_patterns(const Lattice& lattice) {
    if (lattice.shape() != Shape::Grid) {
        throw std::invalid_argument("checkerboard patterns require a grid lattice");
    }
    std::size_t rows = lattice.shape_params()[0];
    std::size_t cols = lattice.shape_params()[1];
    MeasurementPattern a, b;
    a.basis.resize(rows * cols);
    b.basis.resize(rows * cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            bool color = (r + c) % 2 != 0;
            a.basis[r * cols + c] = color ? MeasBasis::Z : MeasBasis::X;
            b.basis[r * cols + c] = color ? MeasBasis::X : MeasBasis::Z;
        }
    }
    return {a, b};
}

bool pattern_covers(const MeasurementPattern& pattern, const PauliOperator& s) {
    if (pattern.num_sites() != s.num_sites()) {
        throw std::invalid_argument("pattern and operator sizes differ");
    }
    for (std::size_t q = 0; q < s.num_sites(); q++) {
        char letter = s.letter_at(q);
        if (letter == 'I') continue;
        if (static_cast<char>(pattern.resolved_at(q)) != letter) return false;
    }
    return true;
}

std::vector<MeasurementPattern> plan_patterns(const StabilizerSet& set, PlanOrder order,
                                              std::uint64_t seed) {
    if (set.ops.empty()) throw std::invalid_argument("cannot plan an empty stabilizer set");
    std::size_t n = set.lattice->num_sites();

    std::vector<std::size_t> sequence(set.size());
    std::iota(sequence.begin(), sequence.end(), 0);
    if (order == PlanOrder::PenaltyAscending) {
        std::vector<double> pens(set.size());
        for (std::size_t i = 0; i < set.size(); i++) {
            pens[i] = stabilizer_penalty(set.ops[i], *set.lattice);
        }
        std::stable_sort(sequence.begin(), sequence.end(),
                         [&](std::size_t a, std::size_t b) { return pens[a] < pens[b]; });
    } else if (order == PlanOrder::RandomSeeded) {
        std::mt19937_64 rng(seed);
        std::shuffle(sequence.begin(), sequence.end(), rng);
    }

    std::vector<bool> covered(set.size(), false);
    std::vector<MeasurementPattern> patterns;
    std::size_t remaining = set.size();
    while (remaining > 0) {
        MeasurementPattern pattern;
        pattern.basis.assign(n, MeasBasis::Free);
        bool admitted_any = false;
        for (std::size_t i : sequence) {
            if (covered[i]) continue;
            const PauliOperator& op = set.ops[i];
            bool fits = true;
            for (std::size_t q = 0; q < n && fits; q++) {
                char letter = op.letter_at(q);
                if (letter == 'I') continue;
                MeasBasis pinned = pattern.basis[q];
                if (pinned != MeasBasis::Free && static_cast<char>(pinned) != letter) fits = false;
            }
            if (!fits) continue;
            for (std::size_t q = 0; q < n; q++) {
                char letter = op.letter_at(q);
                if (letter != 'I') pattern.basis[q] = static_cast<MeasBasis>(letter);
            }
            covered[i] = true;
            remaining--;
            admitted_any = true;
        }
        if (!admitted_any) {
            // Cannot happen: an empty pattern admits any single stabilizer.
            throw std::logic_error("planner failed to admit a stabilizer");
        }
        patterns.push_back(std::move(pattern));
    }
    return patterns;
}

double pattern_penalty(const MeasurementPattern& pattern, const Lattice& lattice) {
    if (pattern.num_sites() != lattice.num_sites()) {
        throw std::invalid_argument("pattern size does not match lattice");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < lattice.num_sites(); j++) {
        for (std::size_t k = j + 1; k < lattice.num_sites(); k++) {
            double w = lattice.weight(j, k);
            if (w > 0.0 && pattern.resolved_at(j) != pattern.resolved_at(k)) total += w * w;
        }
    }
    return total;
}

}  // namespace stabgrid
