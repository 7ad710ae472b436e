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

#include "stabgrid/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stabgrid {

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::Grid: return "grid";
        case Shape::TriFixed: return "tri_fixed";
        case Shape::Triangle: return "triangle";
        case Shape::Path: return "path";
        case Shape::Custom: return "custom";
    }
    throw std::logic_error("unknown shape");
}

Shape shape_from_name(const std::string& name) {
    if (name == "grid") return Shape::Grid;
    if (name == "tri_fixed") return Shape::TriFixed;
    if (name == "triangle") return Shape::Triangle;
    if (name == "path") return Shape::Path;
    if (name == "custom") return Shape::Custom;
    throw std::invalid_argument("unknown lattice shape: " + name);
}

Lattice::Lattice(Shape shape, std::vector<std::size_t> shape_params, std::size_t num_sites,
                 std::vector<double> adjacency, std::vector<std::array<double, 2>> coords,
                 std::vector<std::size_t> row_structure)
    : shape_(shape),
      shape_params_(std::move(shape_params)),
      num_sites_(num_sites),
      adjacency_(std::move(adjacency)),
      coords_(std::move(coords)),
      row_structure_(std::move(row_structure)),
      binary_adjacency_(num_sites, num_sites),
      binary_(true) {
    if (num_sites_ == 0) throw std::invalid_argument("lattice must have at least one site");
    if (adjacency_.size() != num_sites_ * num_sites_) {
        throw std::invalid_argument("adjacency must be a dense n x n matrix");
    }
    if (coords_.size() != num_sites_) throw std::invalid_argument("one coordinate pair per site required");
    for (std::size_t j = 0; j < num_sites_; j++) {
        if (adjacency_[j * num_sites_ + j] != 0.0) {
            throw std::invalid_argument("adjacency diagonal must be zero");
        }
        for (std::size_t k = 0; k < num_sites_; k++) {
            double w = adjacency_[j * num_sites_ + k];
            if (w < 0.0 || w > 1.0) throw std::invalid_argument("adjacency entries must lie in [0,1]");
            if (w != adjacency_[k * num_sites_ + j]) {
                throw std::invalid_argument("adjacency must be symmetric");
            }
            if (w > 0.0) {
                binary_adjacency_.set(j, k, true);
                if (w != 1.0) binary_ = false;
            }
        }
    }
    for (std::size_t j = 0; j < num_sites_; j++) {
        for (std::size_t k = j + 1; k < num_sites_; k++) {
            if (coords_[j] == coords_[k]) throw std::invalid_argument("site coordinates must be distinct");
        }
    }
}

std::size_t Lattice::degree(std::size_t site) const {
    if (site >= num_sites_) throw std::out_of_range("site index out of range");
    return neighbor_bits(site).count();
}

std::size_t Lattice::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t j = 0; j < num_sites_; j++) twice += neighbor_bits(j).count();
    return twice / 2;
}

namespace {

std::vector<double> zero_matrix(std::size_t n) {
    return std::vector<double>(n * n, 0.0);
}

void add_edge(std::vector<double>& a, std::size_t n, std::size_t j, std::size_t k) {
    a[j * n + k] = 1.0;
    a[k * n + j] = 1.0;
}

}  // namespace

LatticePtr make_grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
    std::size_t n = rows * cols;
    auto a = zero_matrix(n);
    auto idx = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    std::vector<std::array<double, 2>> coords(n);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            coords[idx(r, c)] = {static_cast<double>(c), static_cast<double>(r)};
            if (c + 1 < cols) add_edge(a, n, idx(r, c), idx(r, c + 1));
            if (r + 1 < rows) add_edge(a, n, idx(r, c), idx(r + 1, c));
        }
    }
    return std::make_shared<Lattice>(Shape::Grid, std::vector<std::size_t>{rows, cols}, n,
                                     std::move(a), std::move(coords),
                                     std::vector<std::size_t>(rows, cols));
}

LatticePtr make_tri_fixed(std::size_t rows, std::size_t width) {
    if (rows == 0 || width == 0) throw std::invalid_argument("lattice dimensions must be positive");
    std::size_t n = rows * width;
    auto a = zero_matrix(n);
    auto idx = [width](std::size_t r, std::size_t c) { return r * width + c; };
    std::vector<std::array<double, 2>> coords(n);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < width; c++) {
            coords[idx(r, c)] = {static_cast<double>(c) + 0.5 * static_cast<double>(r),
                                 static_cast<double>(r)};
            if (c + 1 < width) add_edge(a, n, idx(r, c), idx(r, c + 1));
            if (r + 1 < rows) {
                add_edge(a, n, idx(r, c), idx(r + 1, c));
                if (c > 0) add_edge(a, n, idx(r, c), idx(r + 1, c - 1));
            }
        }
    }
    return std::make_shared<Lattice>(Shape::TriFixed, std::vector<std::size_t>{rows, width}, n,
                                     std::move(a), std::move(coords),
                                     std::vector<std::size_t>(rows, width));
}

LatticePtr make_triangle(std::size_t side) {
    if (side == 0) throw std::invalid_argument("triangle side must be positive");
    std::size_t n = side * (side + 1) / 2;
    auto a = zero_matrix(n);
    std::vector<std::size_t> row_start(side);
    std::vector<std::size_t> row_len(side);
    std::size_t acc = 0;
    for (std::size_t i = 0; i < side; i++) {
        row_start[i] = acc;
        row_len[i] = i + 1;
        acc += i + 1;
    }
    auto idx = [&row_start](std::size_t i, std::size_t j) { return row_start[i] + j; };
    std::vector<std::array<double, 2>> coords(n);
    for (std::size_t i = 0; i < side; i++) {
        for (std::size_t j = 0; j <= i; j++) {
            coords[idx(i, j)] = {static_cast<double>(j) - 0.5 * static_cast<double>(i),
                                 static_cast<double>(i)};
            if (j + 1 <= i) add_edge(a, n, idx(i, j), idx(i, j + 1));
            if (i + 1 < side) {
                add_edge(a, n, idx(i, j), idx(i + 1, j));
                add_edge(a, n, idx(i, j), idx(i + 1, j + 1));
            }
        }
    }
    return std::make_shared<Lattice>(Shape::Triangle, std::vector<std::size_t>{side}, n,
                                     std::move(a), std::move(coords), std::move(row_len));
}

LatticePtr make_path(std::size_t num_sites) {
    if (num_sites == 0) throw std::invalid_argument("path length must be positive");
    auto a = zero_matrix(num_sites);
    std::vector<std::array<double, 2>> coords(num_sites);
    for (std::size_t i = 0; i < num_sites; i++) {
        coords[i] = {static_cast<double>(i), 0.0};
        if (i + 1 < num_sites) add_edge(a, num_sites, i, i + 1);
    }
    return std::make_shared<Lattice>(Shape::Path, std::vector<std::size_t>{num_sites}, num_sites,
                                     std::move(a), std::move(coords),
                                     std::vector<std::size_t>{num_sites});
}

LatticePtr make_custom(std::size_t num_sites, const std::vector<double>& weights,
                       std::vector<std::array<double, 2>> coords) {
    if (coords.empty()) {
        coords.resize(num_sites);
        double radius = std::max(1.0, static_cast<double>(num_sites) / (2.0 * std::numbers::pi));
        for (std::size_t i = 0; i < num_sites; i++) {
            double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(std::max<std::size_t>(num_sites, 1));
            coords[i] = {radius * std::cos(angle), radius * std::sin(angle)};
        }
    }
    return std::make_shared<Lattice>(Shape::Custom, std::vector<std::size_t>{num_sites}, num_sites,
                                     weights, std::move(coords), std::vector<std::size_t>{});
}

std::vector<std::pair<std::size_t, double>> neighbors(const Lattice& lattice, std::size_t site) {
    if (site >= lattice.num_sites()) throw std::out_of_range("site index out of range");
    std::vector<std::pair<std::size_t, double>> out;
    for (std::size_t k = 0; k < lattice.num_sites(); k++) {
        double w = lattice.weight(site, k);
        if (w > 0.0) out.emplace_back(k, w);
    }
    return out;
}

}  // namespace stabgrid
