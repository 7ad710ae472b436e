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

#include "stabgrid/stabilizer.hpp"

#include <bit>
#include <string>

namespace stabgrid {

SingularMatrixError::SingularMatrixError(std::size_t rank_, std::size_t size_)
    : std::invalid_argument("transform matrix is singular over GF(2): rank " +
                            std::to_string(rank_) + " of " + std::to_string(size_)),
      rank(rank_),
      size(size_) {}

StabilizerSet canonical_set(LatticePtr lattice) {
    StabilizerSet set;
    set.lattice = lattice;
    std::size_t n = lattice->num_sites();
    set.ops.reserve(n);
    for (std::size_t a = 0; a < n; a++) {
        gf2::BitVec x(n);
        x.set(a, true);
        set.ops.emplace_back(std::move(x), lattice->neighbor_bits(a), 0);
    }
    return set;
}

gf2::BitVec symplectic_row(const PauliOperator& p) {
    std::size_t n = p.num_sites();
    gf2::BitVec row(2 * n);
    for (std::size_t i : p.x.ones()) row.set(i, true);
    for (std::size_t i : p.z.ones()) row.set(n + i, true);
    return row;
}

StabilizerSet transform_set(const StabilizerSet& set, const gf2::BitMatrix& m) {
    std::size_t n = set.size();
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument("transform matrix must be square and match the set size");
    }
    if (!m.nonsingular()) throw SingularMatrixError(m.rank(), n);

    StabilizerSet out;
    out.lattice = set.lattice;
    out.ops.reserve(n);
    std::size_t sites = set.ops.empty() ? 0 : set.ops.front().num_sites();
    for (std::size_t j = 0; j < n; j++) {
        PauliOperator acc = PauliOperator::identity(sites);
        for (std::size_t k = 0; k < n; k++) {
            if (m.get(j, k)) acc = multiply(acc, set.ops[k]);
        }
        out.ops.push_back(std::move(acc));
    }
    return out;
}

std::size_t gf2_rank(const StabilizerSet& set) {
    std::vector<gf2::BitVec> rows;
    rows.reserve(set.size());
    for (const auto& op : set.ops) rows.push_back(symplectic_row(op));
    return gf2::BitMatrix::from_rows(std::move(rows)).rank();
}

bool in_canonical_group(const StabilizerSet& set) {
    // Canonical (x|z) rows span the group's symplectic image; membership is a
    // rank question because products only XOR the rows.
    gf2::EchelonBasis basis(2 * set.lattice->num_sites());
    for (const auto& op : canonical_set(set.lattice).ops) {
        basis.try_insert(symplectic_row(op));
    }
    for (const auto& op : set.ops) {
        if (!basis.in_span(symplectic_row(op))) return false;
    }
    return true;
}

GroupEnumerator::GroupEnumerator(const StabilizerSet& set, std::size_t limit) {
    if (set.size() > limit) {
        throw std::invalid_argument("generating set size " + std::to_string(set.size()) +
                                    " exceeds enumeration limit " + std::to_string(limit));
    }
    generators_ = set.ops;
    std::size_t sites = set.lattice ? set.lattice->num_sites()
                                    : (generators_.empty() ? 0 : generators_.front().num_sites());
    current_ = PauliOperator::identity(sites);
}

bool GroupEnumerator::next(PauliOperator& out, std::uint64_t* mask) {
    if (done_) return false;
    if (index_ > 0) {
        // Gray code: element index_ differs from index_-1 in exactly one generator.
        std::uint64_t gray_prev = (index_ - 1) ^ ((index_ - 1) >> 1);
        std::uint64_t gray_cur = index_ ^ (index_ >> 1);
        auto changed = static_cast<std::size_t>(std::countr_zero(gray_prev ^ gray_cur));
        current_ = multiply(current_, generators_[changed]);
    }
    out = current_;
    if (mask != nullptr) *mask = index_ ^ (index_ >> 1);
    index_++;
    if (index_ == size()) done_ = true;
    return true;
}

PauliOperator GroupEnumerator::element_for_mask(std::uint64_t mask) const {
    PauliOperator acc = PauliOperator::identity(current_.num_sites());
    for (std::size_t k = 0; k < generators_.size(); k++) {
        if ((mask >> k) & 1u) acc = multiply(acc, generators_[k]);
    }
    return acc;
}

void GroupEnumerator::reset() {
    index_ = 0;
    done_ = false;
    current_ = PauliOperator::identity(current_.num_sites());
}

std::vector<PauliOperator> enumerate_group(const StabilizerSet& set, std::size_t limit) {
    GroupEnumerator gen(set, limit);
    std::vector<PauliOperator> out;
    out.reserve(gen.size());
    PauliOperator p;
    while (gen.next(p)) out.push_back(p);
    return out;
}

}  // namespace stabgrid
