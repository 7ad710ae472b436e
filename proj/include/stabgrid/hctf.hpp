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

#ifndef STABGRID_HCTF_HPP
#define STABGRID_HCTF_HPP

#include <string>
#include <vector>

#include "stabgrid/stabilizer.hpp"

namespace stabgrid {

/// X-only stabilizer support. Membership invariant: A·member ≡ 0 (mod 2)
/// where A is the binarized lattice adjacency.
struct XPattern {
    gf2::BitVec member;
    std::vector<std::size_t> row_structure;  // optional row-major reshaping

    std::size_t num_sites() const { return member.size(); }
};

/// Basis of the GF(2) null space of the binarized adjacency. An empty result
/// means only the trivial HCTF exists.
std::vector<XPattern> kernel_basis(const Lattice& lattice);

/// True iff the kernel is nontrivial (a node of odd degree surrounded by the
/// pattern would leave an uncancellable Z, so many shapes fail this).
bool hctf_feasible(const Lattice& lattice);

struct Propagation {
    std::vector<gf2::BitVec> rows;  // excludes the terminating all-zero row
    bool terminated = false;
};

/// Row-by-row completion on a rectangular lattice from a fixed first row:
/// a_{r+1}^c = a_r^{c−1} + a_r^{c+1} + a_{r−1}^c (mod 2), zero padding on
/// both sides and a zero dummy row above. Stops at an all-zero row
/// (terminated, zero row excluded) or after max_rows (not terminated).
/// max_rows = 0 selects the default budget 4·width².
Propagation propagate_rectangular(std::size_t width, const gf2::BitVec& initial_row,
                                  std::size_t max_rows = 0);

/// Same scheme for the fixed-width (sheared) triangular lattice:
/// b_{r+1}^c = b_{r+1}^{c−1} + b_r^{c−1} + b_{r−1}^c + b_{r−1}^{c+1} + b_r^{c+1},
/// evaluated left-to-right within the new row.
Propagation propagate_triangular(std::size_t width, const gf2::BitVec& initial_row,
                                 std::size_t max_rows = 0);

/// Stacks a terminated propagation into an XPattern on the matching lattice.
XPattern stack_rows(const Propagation& propagation, std::size_t width);

struct TriangleSolveError : std::runtime_error {
    TriangleSolveError(std::size_t ring, const std::string& what);
    std::size_t ring;  // the k whose boundary assignment had no completion
};

/// Canonical concentric HCTF set of a triangle lattice: the k-th pattern
/// fixes X on all boundary sites except the k−1 nearest each corner along
/// every edge, then completes the interior by a constrained GF(2) solve.
/// Returns ⌊(side+1)/2⌋ independent, kernel-verified patterns.
std::vector<XPattern> triangle_canonical_hctf(std::size_t side);

struct TilingError : std::runtime_error {
    TilingError(std::size_t site, const std::string& what);
    std::size_t site;  // first site whose Z factors fail to cancel
};

/// Tiles k×l copies of an m×m-grid kernel pattern, separated by single
/// all-zero rows/columns, mirroring copies vertically on odd block rows and
/// horizontally on odd block columns. The result is verified to lie in the
/// kernel of the (km+k−1)×(lm+l−1) grid.
XPattern extended_tiling(const XPattern& base, std::size_t k, std::size_t l);

/// Group element with X support equal to the pattern (product of the
/// canonical generators it selects); phase is tracked, z cancels exactly
/// when the pattern is in the kernel.
PauliOperator lift_to_operator(const XPattern& pattern, const StabilizerSet& canonical);

/// Rows of '.'/'X'; falls back to one row when no row structure is known.
std::string to_ascii(const XPattern& pattern);

}  // namespace stabgrid

#endif
