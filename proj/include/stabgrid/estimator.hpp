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

#ifndef STABGRID_ESTIMATOR_HPP
#define STABGRID_ESTIMATOR_HPP

#include <cstdint>
#include <vector>

#include "stabgrid/planner.hpp"
#include "stabgrid/stabilizer.hpp"

namespace stabgrid {

enum class VacancyPolicy { Plus, Minus, Skip };

/// Outcome corruption model: a site's readout is corrupted with probability
/// 1 − (1 − p_flip)^d, where d counts adjacent sites measured in a different
/// basis; independently, a site is vacant with probability p_vacancy per
/// shot. The stream of draws is fully determined by the seed.
struct NoiseModel {
    double p_flip = 0.0;
    double p_vacancy = 0.0;
    VacancyPolicy vacancy_policy = VacancyPolicy::Minus;
    std::uint64_t seed = 0;
};

/// One signed value per site per shot: ±1 outcome, 0 for a vacant site.
struct ShotTable {
    std::uint32_t shots = 0;
    std::uint32_t num_sites = 0;
    std::vector<std::int8_t> data;  // shot-major

    std::int8_t at(std::uint32_t shot, std::uint32_t site) const {
        return data[static_cast<std::size_t>(shot) * num_sites + site];
    }
};

enum class Exec { Serial, OpenMP };
enum class SimBackend { Auto, Statevector, Tableau };

/// Exact ⟨ψ|P|ψ⟩ on the ideal cluster state (statevector, ≤ 12 sites).
double cluster_expectation_oracle(const Lattice& lattice, const PauliOperator& p);

/// Samples ideal per-site outcomes for the pattern, then applies the noise
/// model. Shots are split into `partitions` contiguous blocks, each with a
/// counter-derived sub-seed: output is identical for a fixed
/// (seed, partitions) no matter the execution policy or thread count.
ShotTable simulate_pattern(const Lattice& lattice, const MeasurementPattern& pattern,
                           std::uint32_t shots, const NoiseModel& noise,
                           std::uint32_t partitions = 1, Exec exec = Exec::Serial,
                           SimBackend backend = SimBackend::Auto);

struct StabilizerEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t pattern_index = 0;
    std::uint32_t shots_used = 0;
};

struct EstimationReport {
    std::vector<StabilizerEstimate> per_stabilizer;
    std::vector<std::uint32_t> shots_per_pattern;
    double fidelity_bound = 0.0;
};

/// ½[Σ means − (n−2)] with n the lattice size.
double fidelity_lower_bound(const std::vector<double>& means, std::size_t num_sites);

/// Per-stabilizer support-product estimates from the first covering pattern
/// in the plan; vacancies resolve to +1, −1 or drop the shot per policy.
EstimationReport estimate_set(const std::vector<ShotTable>& tables, const StabilizerSet& set,
                              const std::vector<MeasurementPattern>& plan, VacancyPolicy policy);

}  // namespace stabgrid

#endif
