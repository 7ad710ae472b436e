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

#include "stabgrid/hctf.hpp"

#include <map>
#include <string>

namespace stabgrid {

std::vector<XPattern> kernel_basis(const Lattice& lattice) {
    std::vector<XPattern> basis;
    for (auto& v : lattice.binary_adjacency().nullspace_basis()) {
        basis.push_back(XPattern{std::move(v), lattice.row_structure()});
    }
    return basis;
}

bool hctf_feasible(const Lattice& lattice) {
    return !lattice.binary_adjacency().nullspace_basis().empty();
}

namespace {

std::size_t default_budget(std::size_t width, std::size_t max_rows) {
    return max_rows != 0 ? max_rows : 4 * width * width;
}

bool row_bit(const gf2::BitVec& row, std::size_t width, std::size_t c) {
    return c < width && row.get(c);
}

}  // namespace

Propagation propagate_rectangular(std::size_t width, const gf2::BitVec& initial_row,
                                  std::size_t max_rows) {
    if (initial_row.size() != width) throw std::invalid_argument("initial row length must equal width");
    std::size_t budget = default_budget(width, max_rows);

    Propagation out;
    gf2::BitVec above(width);  // dummy zero row above the initial row
    gf2::BitVec current = initial_row;
    if (current.none()) {
        out.terminated = true;
        return out;
    }
    while (out.rows.size() < budget) {
        out.rows.push_back(current);
        gf2::BitVec next(width);
        for (std::size_t c = 0; c < width; c++) {
            bool v = (c > 0 && current.get(c - 1)) ^ row_bit(current, width, c + 1) ^ above.get(c);
            next.set(c, v);
        }
        if (next.none()) {
            out.terminated = true;
            return out;
        }
        above = std::move(current);
        current = std::move(next);
    }
    return out;
}

Propagation propagate_triangular(std::size_t width, const gf2::BitVec& initial_row,
                                 std::size_t max_rows) {
    if (initial_row.size() != width) throw std::invalid_argument("initial row length must equal width");
    std::size_t budget = default_budget(width, max_rows);

    Propagation out;
    gf2::BitVec above(width);
    gf2::BitVec current = initial_row;
    if (current.none()) {
        out.terminated = true;
        return out;
    }
    while (out.rows.size() < budget) {
        out.rows.push_back(current);
        gf2::BitVec next(width);
        for (std::size_t c = 0; c < width; c++) {
            // next^{c-1} is already final: the recurrence is evaluated left to right.
            bool v = (c > 0 && next.get(c - 1)) ^ (c > 0 && current.get(c - 1)) ^ above.get(c) ^
                     row_bit(above, width, c + 1) ^ row_bit(current, width, c + 1);
            next.set(c, v);
        }
        if (next.none()) {
            out.terminated = true;
            return out;
        }
        above = std::move(current);
        current = std::move(next);
    }
    return out;
}

XPattern stack_rows(const Propagation& propagation, std::size_t width) {
    XPattern pattern;
    pattern.member = gf2::BitVec(propagation.rows.size() * width);
    for (std::size_t r = 0; r < propagation.rows.size(); r++) {
        for (std::size_t c : propagation.rows[r].ones()) pattern.member.set(r * width + c, true);
    }
    pattern.row_structure.assign(propagation.rows.size(), width);
    return pattern;
}

TriangleSolveError::TriangleSolveError(std::size_t ring_, const std::string& what_)
    : std::runtime_error(what_), ring(ring_) {}

std::vector<XPattern> triangle_canonical_hctf(std::size_t side) {
    if (side == 0) throw std::invalid_argument("triangle side must be positive");
    LatticePtr lattice = make_triangle(side);
    std::size_t n = lattice->num_sites();
    const auto& adjacency = lattice->binary_adjacency();

    // Row-major index of triangle site (i,j), row i holding i+1 sites.
    auto idx = [](std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; };

    // The three lattice edges, each listed corner to corner.
    std::vector<std::vector<std::size_t>> edges(3);
    for (std::size_t i = 0; i < side; i++) {
        edges[0].push_back(idx(i, 0));               // left
        edges[1].push_back(idx(i, i));               // right
        edges[2].push_back(idx(side - 1, i));        // bottom
    }
    std::vector<bool> on_boundary(n, false);
    for (const auto& e : edges) {
        for (std::size_t s : e) on_boundary[s] = true;
    }
    std::vector<std::size_t> interior;
    for (std::size_t s = 0; s < n; s++) {
        if (!on_boundary[s]) interior.push_back(s);
    }
    std::map<std::size_t, std::size_t> interior_index;
    for (std::size_t i = 0; i < interior.size(); i++) interior_index[interior[i]] = i;

    std::size_t count = (side + 1) / 2;
    std::vector<XPattern> patterns;
    for (std::size_t k = 1; k <= count; k++) {
        // Boundary assignment: drop the k−1 sites nearest each corner of every
        // edge. Corners lie on two edges and must be dropped by both.
        std::vector<bool> boundary_value = on_boundary;
        for (const auto& e : edges) {
            for (std::size_t d = 0; d < e.size(); d++) {
                if (d < k - 1 || e.size() - 1 - d < k - 1) boundary_value[e[d]] = false;
            }
        }

        // Solve A·v ≡ 0 for the interior given the fixed boundary: one
        // cancellation equation per site, unknowns are the interior values.
        gf2::BitMatrix system(n, interior.size());
        gf2::BitVec rhs(n);
        for (std::size_t s = 0; s < n; s++) {
            for (std::size_t t : adjacency.row(s).ones()) {
                auto it = interior_index.find(t);
                if (it != interior_index.end()) {
                    system.set(s, it->second, !system.get(s, it->second));
                } else if (boundary_value[t]) {
                    rhs.set(s, !rhs.get(s));
                }
            }
        }
        auto solution = system.solve(rhs);
        if (!solution) {
            throw TriangleSolveError(
                k, "no interior completion for boundary ring " + std::to_string(k) +
                       " of triangle(" + std::to_string(side) + ")");
        }
        XPattern pattern;
        pattern.member = gf2::BitVec(n);
        for (std::size_t s = 0; s < n; s++) {
            if (boundary_value[s]) pattern.member.set(s, true);
        }
        for (std::size_t i = 0; i < interior.size(); i++) {
            if (solution->get(i)) pattern.member.set(interior[i], true);
        }
        pattern.row_structure = lattice->row_structure();
        if (adjacency.multiply(pattern.member).any()) {
            throw TriangleSolveError(k, "completed pattern fails the kernel check");
        }
        patterns.push_back(std::move(pattern));
    }
    return patterns;
}

TilingError::TilingError(std::size_t site_, const std::string& what_)
    : std::runtime_error(what_), site(site_) {}

XPattern extended_tiling(const XPattern& base, std::size_t k, std::size_t l) {
    if (k == 0 || l == 0) throw std::invalid_argument("tiling multiplicities must be positive");
    if (base.row_structure.empty()) throw std::invalid_argument("base pattern needs a row structure");
    std::size_t m = base.row_structure.size();
    for (std::size_t len : base.row_structure) {
        if (len != m) throw std::invalid_argument("base pattern must live on a square m x m grid");
    }
    {
        LatticePtr base_grid = make_grid(m, m);
        if (base_grid->binary_adjacency().multiply(base.member).any()) {
            throw std::invalid_argument("base pattern is not a kernel element of its grid");
        }
    }

    std::size_t out_rows = k * m + (k - 1);
    std::size_t out_cols = l * m + (l - 1);
    XPattern out;
    out.member = gf2::BitVec(out_rows * out_cols);
    out.row_structure.assign(out_rows, out_cols);
    for (std::size_t bi = 0; bi < k; bi++) {
        for (std::size_t bj = 0; bj < l; bj++) {
            for (std::size_t r = 0; r < m; r++) {
                for (std::size_t c = 0; c < m; c++) {
                    std::size_t src_r = (bi % 2 == 1) ? m - 1 - r : r;  // vertical mirror
                    std::size_t src_c = (bj % 2 == 1) ? m - 1 - c : c;  // horizontal mirror
                    if (base.member.get(src_r * m + src_c)) {
                        std::size_t rr = bi * (m + 1) + r;
                        std::size_t cc = bj * (m + 1) + c;
                        out.member.set(rr * out_cols + cc, true);
                    }
                }
            }
        }
    }

    LatticePtr extended = make_grid(out_rows, out_cols);
    gf2::BitVec residue = extended->binary_adjacency().multiply(out.member);
    std::size_t violated = residue.find_first();
    if (violated != gf2::BitVec::npos) {
        throw TilingError(violated, "tiled pattern leaves an uncancelled Z at site " +
                                        std::to_string(violated + 1) + " (1-based, row-major)");
    }
    return out;
}

PauliOperator lift_to_operator(const XPattern& pattern, const StabilizerSet& canonical) {
    if (pattern.num_sites() != canonical.size()) {
        throw std::invalid_argument("pattern size does not match the canonical set");
    }
    PauliOperator acc = PauliOperator::identity(pattern.num_sites());
    for (std::size_t a : pattern.member.ones()) acc = multiply(acc, canonical.ops[a]);
    return acc;
}

std::string to_ascii(const XPattern& pattern) {
    std::string out;
    const auto& rows = pattern.row_structure;
    if (rows.empty()) {
        for (std::size_t i = 0; i < pattern.num_sites(); i++) {
            out.push_back(pattern.member.get(i) ? 'X' : '.');
        }
        out.push_back('\n');
        return out;
    }
    std::size_t cursor = 0;
    for (std::size_t len : rows) {
        for (std::size_t c = 0; c < len; c++) {
            out.push_back(pattern.member.get(cursor + c) ? 'X' : '.');
        }
        cursor += len;
        out.push_back('\n');
    }
    return out;
}

}  // namespace stabgrid
