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

#include "stabgrid/gf2.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace stabgrid::gf2 {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t num_bits) {
    return num_bits / kWordBits + (num_bits % kWordBits != 0);
}

// First row at or below `from` with a one in column c, or BitVec::npos.
std::size_t find_pivot(const std::vector<BitVec>& rows, std::size_t from, std::size_t c) {
    for (std::size_t i = from; i < rows.size(); i++) {
        if (rows[i].get(c)) return i;
    }
    return BitVec::npos;
}
}  // namespace

BitVec::BitVec(std::size_t num_bits)
    : num_bits_(num_bits), words_(word_count(num_bits), 0) {}

BitVec BitVec::from_indices(std::size_t num_bits, std::initializer_list<std::size_t> ones) {
    BitVec v(num_bits);
    for (std::size_t i : ones) v.set(i, true);
    return v;
}

BitVec BitVec::from_indices(std::size_t num_bits, const std::vector<std::size_t>& ones) {
    BitVec v(num_bits);
    for (std::size_t i : ones) v.set(i, true);
    return v;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string must contain only '0' and '1'");
        }
    }
    return v;
}

bool BitVec::get(std::size_t i) const {
    assert(i < num_bits_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool value) {
    assert(i < num_bits_);
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

void BitVec::flip(std::size_t i) {
    assert(i < num_bits_);
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

void BitVec::clear() {
    for (auto& w : words_) w = 0;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    assert(num_bits_ == other.num_bits_);
    for (std::size_t i = 0; i < words_.size(); i++) words_[i] ^= other.words_[i];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    assert(num_bits_ == other.num_bits_);
    for (std::size_t i = 0; i < words_.size(); i++) words_[i] &= other.words_[i];
    return *this;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w) return true;
    }
    return false;
}

std::size_t BitVec::count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitVec::find_first() const {
    for (std::size_t i = 0; i < words_.size(); i++) {
        if (words_[i]) {
            return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        }
    }
    return npos;
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); i++) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

int BitVec::lex_compare(const BitVec& other) const {
    assert(num_bits_ == other.num_bits_);
    for (std::size_t i = 0; i < words_.size(); i++) {
        std::uint64_t diff = words_[i] ^ other.words_[i];
        if (diff) {
            // The lowest differing bit comes first in the sequence.
            std::size_t bit = static_cast<std::size_t>(std::countr_zero(diff));
            bool mine = (words_[i] >> bit) & 1u;
            return mine ? 1 : -1;  // '0' sorts before '1'
        }
    }
    return 0;
}

std::string BitVec::to_string() const {
    std::string s(num_bits_, '0');
    for (std::size_t i = 0; i < num_bits_; i++) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t and_count(const BitVec& a, const BitVec& b) {
    assert(a.size() == b.size());
    std::size_t total = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t i = 0; i < wa.size(); i++) {
        total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    }
    return total;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows) {
    BitMatrix m;
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != m.cols_) throw std::invalid_argument("ragged rows");
    }
    m.rows_ = std::move(rows);
    return m;
}

std::size_t BitMatrix::rank() const {
    std::vector<BitVec> work = rows_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < work.size(); c++) {
        std::size_t pivot = find_pivot(work, r, c);
        if (pivot == BitVec::npos) continue;
        std::swap(work[r], work[pivot]);
        for (std::size_t i = 0; i < work.size(); i++) {
            if (i != r && work[i].get(c)) work[i] ^= work[r];
        }
        r++;
    }
    return r;
}

bool BitMatrix::nonsingular() const {
    return rows() == cols_ && rank() == cols_;
}

std::vector<BitVec> BitMatrix::nullspace_basis() const {
    std::vector<BitVec> work = rows_;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < work.size(); c++) {
        std::size_t pivot = find_pivot(work, r, c);
        if (pivot == BitVec::npos) continue;
        std::swap(work[r], work[pivot]);
        for (std::size_t i = 0; i < work.size(); i++) {
            if (i != r && work[i].get(c)) work[i] ^= work[r];
        }
        pivot_cols.push_back(c);
        r++;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < cols_; f++) {
        if (is_pivot[f]) continue;
        BitVec v(cols_);
        v.set(f, true);
        for (std::size_t ri = 0; ri < pivot_cols.size(); ri++) {
            if (work[ri].get(f)) v.set(pivot_cols[ri], true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> BitMatrix::solve(const BitVec& rhs) const {
    if (rhs.size() != rows()) throw std::invalid_argument("rhs size mismatch");
    std::vector<BitVec> work = rows_;
    BitVec b = rhs;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < work.size(); c++) {
        std::size_t pivot = find_pivot(work, r, c);
        if (pivot == BitVec::npos) continue;
        std::swap(work[r], work[pivot]);
        bool br = b.get(r), bp = b.get(pivot);
        b.set(r, bp);
        b.set(pivot, br);
        for (std::size_t i = 0; i < work.size(); i++) {
            if (i != r && work[i].get(c)) {
                work[i] ^= work[r];
                b.set(i, b.get(i) ^ b.get(r));
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    for (std::size_t i = r; i < work.size(); i++) {
        if (b.get(i)) return std::nullopt;  // inconsistent
    }
    BitVec x(cols_);
    for (std::size_t ri = 0; ri < pivot_cols.size(); ri++) {
        x.set(pivot_cols[ri], b.get(ri));
    }
    return x;
}

BitVec BitMatrix::multiply(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
    BitVec out(rows());
    for (std::size_t r = 0; r < rows(); r++) {
        out.set(r, and_count(rows_[r], v) % 2 != 0);
    }
    return out;
}

bool EchelonBasis::try_insert(BitVec v) {
    if (v.size() != num_bits_) throw std::invalid_argument("vector size mismatch");
    for (std::size_t i = 0; i < rows_.size(); i++) {
        if (v.get(leads_[i])) v ^= rows_[i];
    }
    std::size_t lead = v.find_first();
    if (lead == BitVec::npos) return false;
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
}

bool EchelonBasis::in_span(BitVec v) const {
    for (std::size_t i = 0; i < rows_.size(); i++) {
        if (v.get(leads_[i])) v ^= rows_[i];
    }
    return v.none();
}

}  // namespace stabgrid::gf2
