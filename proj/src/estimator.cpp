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

#include "stabgrid/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "stabgrid/statevector.hpp"
#include "stabgrid/tableau.hpp"

namespace stabgrid {

namespace {

std::uint64_t splitmix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    return v ^ (v >> 31);
}

std::uint64_t partition_seed(std::uint64_t seed, std::uint32_t partition) {
    return splitmix64(seed ^ splitmix64(partition + 1));
}

// Uniform double in [0,1) built from the top 53 bits: identical on every
// platform, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Tableau of the rotated cluster state: every pattern basis mapped onto Z.
StabilizerTableau rotated_cluster_tableau(const Lattice& lattice,
                                          const MeasurementPattern& pattern) {
    std::size_t n = lattice.num_sites();
    StabilizerTableau tab(n);
    for (std::size_t q = 0; q < n; q++) tab.apply_h(q);
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = j + 1; k < n; k++) {
            if (lattice.adjacent(j, k)) tab.apply_cz(j, k);
        }
    }
    for (std::size_t q = 0; q < n; q++) {
        switch (pattern.resolved_at(q)) {
            case MeasBasis::X: tab.apply_h(q); break;
            case MeasBasis::Y:
                tab.apply_s_dagger(q);
                tab.apply_h(q);
                break;
            default: break;
        }
    }
    return tab;
}

// Per-site corruption probability under the pattern: 1 − (1 − p)^d with d
// the number of adjacent differing-basis neighbors.
std::vector<double> flip_probabilities(const Lattice& lattice, const MeasurementPattern& pattern,
                                       double p_flip) {
    std::size_t n = lattice.num_sites();
    std::vector<double> probs(n, 0.0);
    if (p_flip <= 0.0) return probs;
    for (std::size_t q = 0; q < n; q++) {
        std::size_t d = 0;
        for (std::size_t t : lattice.neighbor_bits(q).ones()) {
            if (pattern.resolved_at(t) != pattern.resolved_at(q)) d++;
        }
        if (d > 0) probs[q] = 1.0 - std::pow(1.0 - p_flip, static_cast<double>(d));
    }
    return probs;
}

void simulate_partition(const Lattice& lattice, const NoiseModel& noise, SimBackend backend,
                        const std::vector<double>& cdf, const StabilizerTableau& prepared,
                        const std::vector<double>& flip_probs, std::uint32_t first_shot,
                        std::uint32_t shot_count, std::uint32_t partition, ShotTable& table) {
    std::size_t n = lattice.num_sites();
    std::mt19937_64 rng(partition_seed(noise.seed, partition));
    std::vector<int> outcomes(n);
    for (std::uint32_t s = 0; s < shot_count; s++) {
        if (backend == SimBackend::Statevector) {
            double u = uniform01(rng);
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            auto bits = static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
            for (std::size_t q = 0; q < n; q++) {
                outcomes[q] = ((bits >> q) & 1u) ? -1 : +1;
            }
        } else {
            StabilizerTableau tab = prepared;
            for (std::size_t q = 0; q < n; q++) {
                int bit = tab.measure_z(q, [&rng]() { return static_cast<int>(rng() & 1u); });
                outcomes[q] = bit ? -1 : +1;
            }
        }
        std::int8_t* row = table.data.data() + static_cast<std::size_t>(first_shot + s) * n;
        for (std::size_t q = 0; q < n; q++) {
            if (noise.p_vacancy > 0.0 && uniform01(rng) < noise.p_vacancy) {
                row[q] = 0;
                continue;
            }
            int value = outcomes[q];
            if (flip_probs[q] > 0.0 && uniform01(rng) < flip_probs[q]) value = -value;
            row[q] = static_cast<std::int8_t>(value);
        }
    }
}

}  // namespace

double cluster_expectation_oracle(const Lattice& lattice, const PauliOperator& p) {
    ClusterStatevector state(lattice);
    return state.expectation(p).real();
}

ShotTable simulate_pattern(const Lattice& lattice, const MeasurementPattern& pattern,
                           std::uint32_t shots, const NoiseModel& noise,
                           std::uint32_t partitions, Exec exec, SimBackend backend) {
    if (shots == 0) throw std::invalid_argument("shot count must be positive");
    if (partitions == 0) throw std::invalid_argument("partition count must be positive");
    if (pattern.num_sites() != lattice.num_sites()) {
        throw std::invalid_argument("pattern size does not match lattice");
    }
    if (noise.p_flip < 0.0 || noise.p_flip > 1.0 || noise.p_vacancy < 0.0 ||
        noise.p_vacancy > 1.0) {
        throw std::invalid_argument("noise probabilities must lie in [0,1]");
    }
    std::size_t n = lattice.num_sites();
    if (backend == SimBackend::Auto) {
        backend = n <= kStatevectorMaxSites ? SimBackend::Statevector : SimBackend::Tableau;
    }
    if (backend == SimBackend::Statevector && n > kStatevectorMaxSites) {
        throw std::invalid_argument("statevector backend is limited to " +
                                    std::to_string(kStatevectorMaxSites) + " sites");
    }
    partitions = std::min(partitions, shots);

    std::vector<double> cdf;
    StabilizerTableau prepared(1);
    if (backend == SimBackend::Statevector) {
        cdf = ClusterStatevector(lattice).measurement_cdf(pattern);
    } else {
        prepared = rotated_cluster_tableau(lattice, pattern);
    }
    std::vector<double> flip_probs = flip_probabilities(lattice, pattern, noise.p_flip);

    ShotTable table;
    table.shots = shots;
    table.num_sites = static_cast<std::uint32_t>(n);
    table.data.assign(static_cast<std::size_t>(shots) * n, 0);

    // Contiguous shot blocks per partition; each block's RNG stream is
    // independent of the others, so blocks may run on any thread.
    std::vector<std::uint32_t> starts(partitions + 1);
    for (std::uint32_t p = 0; p <= partitions; p++) {
        starts[p] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(shots) * p) / partitions);
    }

    if (exec == Exec::OpenMP) {
#pragma omp parallel for schedule(dynamic)
        for (long long p = 0; p < static_cast<long long>(partitions); p++) {
            auto pi = static_cast<std::uint32_t>(p);
            simulate_partition(lattice, noise, backend, cdf, prepared, flip_probs,
                               starts[pi], starts[pi + 1] - starts[pi], pi, table);
        }
    } else {
        for (std::uint32_t p = 0; p < partitions; p++) {
            simulate_partition(lattice, noise, backend, cdf, prepared, flip_probs,
                               starts[p], starts[p + 1] - starts[p], p, table);
        }
    }
    return table;
}

double fidelity_lower_bound(const std::vector<double>& means, std::size_t num_sites) {
    double sum = 0.0;
    for (double m : means) sum += m;
    return 0.5 * (sum - (static_cast<double>(num_sites) - 2.0));
}

EstimationReport estimate_set(const std::vector<ShotTable>& tables, const StabilizerSet& set,
                              const std::vector<MeasurementPattern>& plan, VacancyPolicy policy) {
    if (tables.size() != plan.size()) {
        throw std::invalid_argument("one shot table per pattern required");
    }
    EstimationReport report;
    report.shots_per_pattern.reserve(tables.size());
    for (const auto& t : tables) report.shots_per_pattern.push_back(t.shots);

    std::vector<double> means;
    for (std::size_t i = 0; i < set.size(); i++) {
        const PauliOperator& op = set.ops[i];
        std::size_t pattern_index = plan.size();
        for (std::size_t j = 0; j < plan.size(); j++) {
            if (pattern_covers(plan[j], op)) {
                pattern_index = j;
                break;
            }
        }
        if (pattern_index == plan.size()) {
            throw std::invalid_argument("no pattern in the plan covers stabilizer " +
                                        std::to_string(i + 1) + " (" + to_text(op) + ")");
        }
        const ShotTable& table = tables[pattern_index];
        int sign = rendered_sign(op);
        auto support = (op.x ^ op.z ^ (op.x & op.z)).ones();

        long long sum = 0;
        std::uint32_t used = 0;
        for (std::uint32_t s = 0; s < table.shots; s++) {
            int product = sign;
            bool drop = false;
            for (std::size_t q : support) {
                std::int8_t v = table.at(s, static_cast<std::uint32_t>(q));
                if (v == 0) {
                    if (policy == VacancyPolicy::Skip) {
                        drop = true;
                        break;
                    }
                    v = policy == VacancyPolicy::Plus ? 1 : -1;
                }
                product *= v;
            }
            if (drop) continue;
            sum += product;
            used++;
        }
        if (used == 0) {
            throw std::runtime_error("all shots for stabilizer " + std::to_string(i + 1) +
                                     " were dropped by the skip policy");
        }
        double mean = static_cast<double>(sum) / static_cast<double>(used);
        double std_error =
            used > 1 ? std::sqrt(std::max(0.0, 1.0 - mean * mean) / static_cast<double>(used - 1))
                     : 0.0;
        report.per_stabilizer.push_back(
            StabilizerEstimate{mean, std_error, pattern_index, used});
        means.push_back(mean);
    }
    report.fidelity_bound = fidelity_lower_bound(means, set.lattice->num_sites());
    return report;
}

}  // namespace stabgrid
