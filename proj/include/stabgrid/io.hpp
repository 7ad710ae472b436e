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

#ifndef STABGRID_IO_HPP
#define STABGRID_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabgrid/estimator.hpp"
#include "stabgrid/hctf.hpp"
#include "stabgrid/optimizer.hpp"
#include "stabgrid/penalty.hpp"
#include "stabgrid/planner.hpp"

namespace stabgrid::io {

using nlohmann::json;

json lattice_to_json(const Lattice& lattice);
LatticePtr lattice_from_json(const json& j);

json pauli_to_json(const PauliOperator& p);
PauliOperator pauli_from_json(const json& j);

json set_to_json(const StabilizerSet& set);
StabilizerSet set_from_json(const json& j);

json breakdown_to_json(const PenaltyBreakdown& breakdown);

json xpattern_to_json(const XPattern& pattern);
XPattern xpattern_from_json(const json& j);

json pattern_to_json(const MeasurementPattern& pattern);
MeasurementPattern pattern_from_json(const json& j);

json plan_to_json(const std::vector<MeasurementPattern>& plan, const Lattice& lattice);
std::vector<MeasurementPattern> plan_from_json(const json& j);

json basis_to_json(const OptimizedBasis& basis);

json report_to_json(const EstimationReport& report);

VacancyPolicy vacancy_policy_from_name(const std::string& name);
std::string vacancy_policy_name(VacancyPolicy policy);

/// Binary shot table: "SGSHOT01" magic, u32-LE shots, u32-LE sites, then one
/// signed byte per site per shot (0 encodes vacancy), shot-major.
void write_shot_table(std::ostream& out, const ShotTable& table);
ShotTable read_shot_table(std::istream& in);
void write_shot_table_csv(std::ostream& out, const ShotTable& table);
ShotTable read_shot_table_csv(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace stabgrid::io

#endif
