// Copyright 2026 The qperm Authors
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

#ifndef QPERM_PARTITION_H
#define QPERM_PARTITION_H

#include <string>
#include <string_view>
#include <vector>

#include "qperm/pauli.h"
#include "qperm/rational.h"

namespace qperm {

/// A set partition of {1..k}. Blocks are sorted internally and ordered by
/// their minimum element; two partitions are equal iff they have the same
/// blocks.
class SetPartition {
   public:
    SetPartition() = default;
    /// Validates disjointness and coverage of {1..k}; throws
    /// std::invalid_argument otherwise.
    SetPartition(size_t k, std::vector<std::vector<int>> blocks);

    /// Parses "{1,5}{2}{3,4}{6}". The ground set size is the largest element.
    static SetPartition parse(std::string_view text);
    /// 0_k: all singletons.
    static SetPartition singletons(size_t k);
    /// 1_k: one block.
    static SetPartition one_block(size_t k);
    /// From block labels of points 1..k (labels arbitrary non-negative ints).
    static SetPartition from_labels(const std::vector<int> &labels);

    size_t size() const {
        return k_;
    }
    size_t block_count() const {
        return blocks_.size();
    }
    const std::vector<std::vector<int>> &blocks() const {
        return blocks_;
    }
    /// 0-based block number of each point 1..k (by canonical block order).
    const std::vector<int> &labels() const {
        return labels_;
    }
    bool same_block(int x, int y) const {
        return labels_[x - 1] == labels_[y - 1];
    }
    /// True iff every block of *this lies inside a block of `coarser`.
    bool refines(const SetPartition &coarser) const;

    std::string to_string() const;

    bool operator==(const SetPartition &other) const {
        return k_ == other.k_ && blocks_ == other.blocks_;
    }
    /// Canonical order: lexicographic on the block lists, each block read
    /// as an increasing sequence (a proper prefix sorts first). For k = 2
    /// this puts 0_2 before 1_2.
    bool operator<(const SetPartition &other) const;

   private:
    size_t k_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> labels_;
};

using NCPartition = SetPartition;

/// Default and absolute caps for NC(k) enumeration.
inline constexpr size_t kDefaultNcCap = 10;

bool is_noncrossing(const SetPartition &p);
/// Non-crossing check for a labelling of points laid out on a line.
bool labels_noncrossing(const std::vector<int> &labels);

/// All set partitions of {1..k} (Bell(k) of them), canonical order.
std::vector<SetPartition> enumerate_set_partitions(size_t k);
/// NC(k) in canonical order; throws std::out_of_range for k = 0 or k > cap.
std::vector<NCPartition> enumerate_nc(size_t k, size_t cap = kDefaultNcCap);

/// Kreweras complement on the interleaved set 1 < 1' < 2 < 2' < ... < k',
/// relabelled to {1..k}: i' and j' (i < j) share a block iff the points
/// {i+1..j} form a union of blocks of p.
NCPartition kreweras(const NCPartition &p);

/// Checks that p on the unprimed points together with q on the primed
/// points is non-crossing in the interleaved order.
bool interleaved_noncrossing(const NCPartition &p, const NCPartition &q);

/// 1 iff j is constant on every block of p.
int delta(const SetPartition &p, const MultiIndex &j);

/// Finest common coarsening (connected components of the union of blocks).
SetPartition join(const SetPartition &p, const SetPartition &q);

Integer catalan(unsigned k);

}  // namespace qperm

#endif
