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

#include "stabgrid/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stabgrid::render {

std::string ascii_sites(const Lattice& lattice, const std::string& letters) {
    if (letters.size() != lattice.num_sites()) {
        throw std::invalid_argument("one letter per site required");
    }
    std::string out;
    const auto& rows = lattice.row_structure();
    if (rows.empty()) {
        out = letters;
        out.push_back('\n');
        return out;
    }
    std::size_t widest = 0;
    for (std::size_t len : rows) widest = std::max(widest, len);
    std::size_t cursor = 0;
    for (std::size_t r = 0; r < rows.size(); r++) {
        // Indent ragged rows so triangles render centered.
        if (lattice.shape() == Shape::Triangle) {
            out.append(widest - rows[r], ' ');
        }
        for (std::size_t c = 0; c < rows[r]; c++) {
            out.push_back(letters[cursor + c]);
            if (c + 1 < rows[r]) out.push_back(' ');
        }
        cursor += rows[r];
        out.push_back('\n');
    }
    return out;
}

std::string ascii_operator(const Lattice& lattice, const PauliOperator& op) {
    std::string letters;
    for (std::size_t q = 0; q < op.num_sites(); q++) {
        char l = op.letter_at(q);
        letters.push_back(l == 'I' ? '.' : l);
    }
    return ascii_sites(lattice, letters);
}

std::string ascii_pattern(const Lattice& lattice, const MeasurementPattern& pattern) {
    std::string letters;
    for (MeasBasis b : pattern.basis) letters.push_back(static_cast<char>(b));
    return ascii_sites(lattice, letters);
}

std::string dot_export(const Lattice& lattice, const PauliOperator* overlay) {
    std::ostringstream out;
    out << "graph lattice {\n  node [shape=circle];\n";
    for (std::size_t q = 0; q < lattice.num_sites(); q++) {
        out << "  q" << (q + 1) << " [pos=\"" << lattice.coords()[q][0] << ','
            << -lattice.coords()[q][1] << "!\"";
        if (overlay != nullptr) {
            out << ", label=\"" << (q + 1) << ':' << overlay->letter_at(q) << "\"";
        }
        out << "];\n";
    }
    for (std::size_t j = 0; j < lattice.num_sites(); j++) {
        for (std::size_t k = j + 1; k < lattice.num_sites(); k++) {
            double w = lattice.weight(j, k);
            if (w <= 0.0) continue;
            out << "  q" << (j + 1) << " -- q" << (k + 1);
            if (w != 1.0) out << " [label=\"" << w << "\"]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string svg_export(const Lattice& lattice, const PauliOperator* overlay) {
    constexpr double kScale = 48.0;
    constexpr double kMargin = 32.0;
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    for (const auto& c : lattice.coords()) {
        min_x = std::min(min_x, c[0]);
        max_x = std::max(max_x, c[0]);
        min_y = std::min(min_y, c[1]);
        max_y = std::max(max_y, c[1]);
    }
    auto px = [&](double x) { return kMargin + (x - min_x) * kScale; };
    auto py = [&](double y) { return kMargin + (y - min_y) * kScale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << px(max_x) + kMargin << "\" height=\"" << py(max_y) + kMargin << "\">\n";
    for (std::size_t j = 0; j < lattice.num_sites(); j++) {
        for (std::size_t k = j + 1; k < lattice.num_sites(); k++) {
            double w = lattice.weight(j, k);
            if (w <= 0.0) continue;
            out << "  <line x1=\"" << px(lattice.coords()[j][0]) << "\" y1=\""
                << py(lattice.coords()[j][1]) << "\" x2=\"" << px(lattice.coords()[k][0])
                << "\" y2=\"" << py(lattice.coords()[k][1])
                << "\" stroke=\"black\" stroke-width=\"" << 1.0 + 2.0 * w << "\"/>\n";
        }
    }
    for (std::size_t q = 0; q < lattice.num_sites(); q++) {
        double cx = px(lattice.coords()[q][0]);
        double cy = py(lattice.coords()[q][1]);
        char letter = overlay != nullptr ? overlay->letter_at(q) : 0;
        const char* fill = "white";
        if (letter == 'X') fill = "#9ecae1";
        if (letter == 'Y') fill = "#a1d99b";
        if (letter == 'Z') fill = "#fdae6b";
        out << "  <circle cx=\"" << cx << "\" cy=\"" << cy
            << "\" r=\"12\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << cx << "\" y=\"" << cy + 4
            << "\" text-anchor=\"middle\" font-size=\"10\">";
        if (letter != 0 && letter != 'I') {
            out << letter;
        } else {
            out << (q + 1);
        }
        out << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace stabgrid::render
