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

#ifndef STABGRID_LATTICE_HPP
#define STABGRID_LATTICE_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stabgrid/gf2.hpp"

namespace stabgrid {

enum class Shape { Grid, TriFixed, Triangle, Path, Custom };

std::string shape_name(Shape s);
Shape shape_from_name(const std::string& name);

/// Weighted symmetric adjacency over n sites with 2-D coordinates.
///
/// Entry a_jk stores the coupling whose square is the cross-talk influence
/// of edge (j,k); built-in shapes are binary (entries 0 or 1). Immutable
/// after construction, so values are safe to share across threads.
class Lattice {
  public:
    Lattice(Shape shape, std::vector<std::size_t> shape_params, std::size_t num_sites,
            std::vector<double> adjacency, std::vector<std::array<double, 2>> coords,
            std::vector<std::size_t> row_structure);

    std::size_t num_sites() const { return num_sites_; }
    Shape shape() const { return shape_; }
    const std::vector<std::size_t>& shape_params() const { return shape_params_; }
    const std::vector<std::size_t>& row_structure() const { return row_structure_; }
    const std::vector<std::array<double, 2>>& coords() const { return coords_; }

    double weight(std::size_t j, std::size_t k) const { return adjacency_[j * num_sites_ + k]; }
    bool adjacent(std::size_t j, std::size_t k) const { return weight(j, k) > 0.0; }
    std::size_t degree(std::size_t site) const;
    std::size_t edge_count() const;
    const std::vector<double>& adjacency() const { return adjacency_; }

    /// Adjacency with every nonzero weight collapsed to 1 (the GF(2) view).
    const gf2::BitMatrix& binary_adjacency() const { return binary_adjacency_; }
    const gf2::BitVec& neighbor_bits(std::size_t site) const { return binary_adjacency_.row(site); }

    bool is_binary() const { return binary_; }

  private:
    Shape shape_;
    std::vector<std::size_t> shape_params_;
    std::size_t num_sites_;
    std::vector<double> adjacency_;  // dense n*n, row-major
    std::vector<std::array<double, 2>> coords_;
    std::vector<std::size_t> row_structure_;
    gf2::BitMatrix binary_adjacency_;
    bool binary_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

LatticePtr make_grid(std::size_t rows, std::size_t cols);
/// Fixed-width triangular lattice, sheared rows: (r,c) ~ (r,c±1), (r+1,c), (r+1,c−1).
LatticePtr make_tri_fixed(std::size_t rows, std::size_t width);
/// Triangle lattice of side r: row i holds i+1 sites; (i,j) ~ (i,j±1), (i+1,j), (i+1,j+1).
LatticePtr make_triangle(std::size_t side);
LatticePtr make_path(std::size_t num_sites);
/// Custom weighted lattice. `weights` is a dense symmetric n×n matrix with a
/// zero diagonal and entries in [0,1]; coords default to a circle layout.
LatticePtr make_custom(std::size_t num_sites, const std::vector<double>& weights,
                       std::vector<std::array<double, 2>> coords = {});

/// Sites with a nonzero adjacency entry, ascending index order.
std::vector<std::pair<std::size_t, double>> neighbors(const Lattice& lattice, std::size_t site);

/// Parses the CLI shorthand: grid:RxC, tri:WxH, triangle:R, path:N, file:PATH.
LatticePtr lattice_from_shorthand(const std::string& text);

}  // namespace stabgrid

#endif
