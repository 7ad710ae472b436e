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

#ifndef STABGRID_STABILIZER_HPP
#define STABGRID_STABILIZER_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stabgrid/lattice.hpp"
#include "stabgrid/pauli.hpp"

namespace stabgrid {

/// Ordered list of Pauli operators tied to the lattice they stabilize.
struct StabilizerSet {
    std::vector<PauliOperator> ops;
    LatticePtr lattice;

    std::size_t size() const { return ops.size(); }
};

struct SingularMatrixError : std::invalid_argument {
    SingularMatrixError(std::size_t rank, std::size_t size);
    std::size_t rank;
    std::size_t size;
};

/// Canonical generators: X on a site, Z on its neighbors (any weight > 0).
StabilizerSet canonical_set(LatticePtr lattice);

/// New set with element j = ∏_k ops[k]^{m_jk} (ascending k). m must be a
/// non-singular square binary matrix; a singular one is rejected with its rank.
StabilizerSet transform_set(const StabilizerSet& set, const gf2::BitMatrix& m);

/// Rank of the n×2n (x|z) matrix over GF(2).
std::size_t gf2_rank(const StabilizerSet& set);

/// True when every element lies in the group generated by the lattice's
/// canonical set (GF(2) solve on (x|z) rows).
bool in_canonical_group(const StabilizerSet& set);

/// Concatenated (x|z) row of an operator, x bits first.
gf2::BitVec symplectic_row(const PauliOperator& p);

/// Streams all 2^k products of a generating list in Gray-code order,
/// starting from the identity, with phases tracked.
class GroupEnumerator {
  public:
    static constexpr std::size_t kDefaultLimit = 20;

    explicit GroupEnumerator(const StabilizerSet& set, std::size_t limit = kDefaultLimit);

    /// Total number of elements (2^k).
    std::uint64_t size() const { return std::uint64_t{1} << generators_.size(); }

    /// Writes the next element; returns false once the stream is exhausted.
    /// `mask` (optional) receives the generator-combination bitmask.
    bool next(PauliOperator& out, std::uint64_t* mask = nullptr);

    /// Element for an arbitrary combination bitmask (used to seed sub-ranges).
    PauliOperator element_for_mask(std::uint64_t mask) const;

    void reset();

  private:
    std::vector<PauliOperator> generators_;
    PauliOperator current_;
    std::uint64_t index_ = 0;
    bool done_ = false;
};

std::vector<PauliOperator> enumerate_group(const StabilizerSet& set,
                                           std::size_t limit = GroupEnumerator::kDefaultLimit);

}  // namespace stabgrid

#endif
