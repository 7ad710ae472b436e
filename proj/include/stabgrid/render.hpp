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

#ifndef STABGRID_RENDER_HPP
#define STABGRID_RENDER_HPP

#include <optional>
#include <string>

#include "stabgrid/lattice.hpp"
#include "stabgrid/pauli.hpp"
#include "stabgrid/planner.hpp"

namespace stabgrid::render {

/// Per-site letters laid out by the lattice's row structure ('.' = identity).
std::string ascii_sites(const Lattice& lattice, const std::string& letters);
std::string ascii_operator(const Lattice& lattice, const PauliOperator& op);
std::string ascii_pattern(const Lattice& lattice, const MeasurementPattern& pattern);

/// Graphviz export; an optional operator overlays Pauli letters on nodes.
std::string dot_export(const Lattice& lattice, const PauliOperator* overlay = nullptr);

/// Minimal standalone SVG: sites as circles, edges as lines.
std::string svg_export(const Lattice& lattice, const PauliOperator* overlay = nullptr);

}  // namespace stabgrid::render

#endif
