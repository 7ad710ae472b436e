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

#ifndef STABGRID_GF2_HPP
#define STABGRID_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabgrid::gf2 {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
class BitVec {
  public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BitVec() = default;
    explicit BitVec(std::size_t num_bits);
    static BitVec from_indices(std::size_t num_bits, std::initializer_list<std::size_t> ones);
    static BitVec from_indices(std::size_t num_bits, const std::vector<std::size_t>& ones);
    /// Parses a '0'/'1' string, bit 0 first.
    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return num_bits_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);
    void clear();

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) { lhs ^= rhs; return lhs; }
    friend BitVec operator&(BitVec lhs, const BitVec& rhs) { lhs &= rhs; return lhs; }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    std::size_t find_first() const;  // npos when empty
    std::vector<std::size_t> ones() const;

    bool operator==(const BitVec& other) const = default;
    /// Lexicographic order on the bit sequence b0 b1 b2 ...
    int lex_compare(const BitVec& other) const;

    std::string to_string() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::size_t num_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// popcount(a & b) without materializing the intersection.
std::size_t and_count(const BitVec& a, const BitVec& b);

/// Dense GF(2) matrix stored as bit-packed rows.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVec> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec& row(std::size_t r) { return rows_[r]; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    std::size_t rank() const;
    bool nonsingular() const;
    /// Basis of {v : M v = 0}, deterministic order (free columns ascending).
    std::vector<BitVec> nullspace_basis() const;
    /// One solution of M x = rhs with free variables zero, or nullopt.
    std::optional<BitVec> solve(const BitVec& rhs) const;
    /// M v over GF(2) (v has cols() bits, result rows() bits).
    BitVec multiply(const BitVec& v) const;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Incremental row-echelon basis for independence testing.
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t num_bits) : num_bits_(num_bits) {}

    /// Reduces v against the basis; inserts and returns true if nonzero remains.
    bool try_insert(BitVec v);
    bool in_span(BitVec v) const;
    std::size_t size() const { return rows_.size(); }

  private:
    std::size_t num_bits_;
    std::vector<BitVec> rows_;    // each with a unique leading bit
    std::vector<std::size_t> leads_;
};

}  // namespace stabgrid::gf2

#endif
