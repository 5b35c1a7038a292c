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

#ifndef QPERM_WEINGARTEN_H
#define QPERM_WEINGARTEN_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qperm/partition.h"
#include "qperm/rational_matrix.h"
#include "qperm/tensor.h"

namespace qperm {

/// Gram matrix of the partition vectors e_p, p in NC(k), for n = 4:
/// entry (p, q) = 4^{|p v q|}. Rows follow the canonical NC(k) order.
struct GramMatrix {
    size_t k = 0;
    std::vector<NCPartition> partitions;
    RationalMatrix entries;
};

GramMatrix gram(size_t k);
/// Same matrix by counting multi-indices i with delta(p,i) = delta(q,i) = 1.
RationalMatrix gram_by_counting(size_t k);
/// Exact inverse of gram(k). Throws SingularMatrixError on a zero pivot.
RationalMatrix weingarten_matrix(size_t k);

/// Haar moments int u_{i1 j1} ... u_{ik jk} of the 4 x 4 quantum
/// permutation group, from the Weingarten sum over NC(k) x NC(k).
class WeingartenCalculator {
   public:
    explicit WeingartenCalculator(size_t k);

    size_t order() const {
        return k_;
    }
    const GramMatrix &gram_matrix() const {
        return gram_;
    }
    const RationalMatrix &weingarten() const {
        return w_;
    }
    Rational moment(const MultiIndex &i, const MultiIndex &j) const;
    /// Same, with i and j given by their base-4 codes.
    Rational moment(uint64_t i, uint64_t j) const;

   private:
    size_t kernel_class(uint64_t code) const;

    size_t k_;
    GramMatrix gram_;
    RationalMatrix w_;
    // Kernel partition of every multi-index, and the moment for each pair
    // of kernel classes (the sum only sees which legs carry equal values).
    std::vector<size_t> class_of_code_;
    std::vector<std::vector<Rational>> class_moment_;
};

/// Convenience wrapper; builds a calculator for the length of i.
Rational haar_moment_u(const MultiIndex &i, const MultiIndex &j);

enum class Pipeline { Polynomial, Operator };

/// int pi_{i1 j1} ... pi_{ik jk} in the Pauli model, by symbolic expansion
/// and exact sphere integration of the normalized trace.
Rational model_moment_polynomial(const MultiIndex &i, const MultiIndex &j);
/// The same number as <R^* E R c_j, c_i>.
Rational model_moment_operator(const MultiIndex &i, const MultiIndex &j,
                               const FixedPointProjection &E);
Rational model_moment(const MultiIndex &i, const MultiIndex &j, Pipeline pipeline);

struct MomentMatrixReport {
    size_t k = 0;
    /// Largest |P_ij - U_ij| over all compared entries.
    Rational max_discrepancy = 0;
    uint64_t compared = 0;
    uint64_t nonzero_entries = 0;
    /// Entries additionally recomputed through the polynomial pipeline and
    /// the unfactored operator pipeline.
    uint64_t cross_checked = 0;
    bool passed = false;
    std::string first_mismatch;
    double seconds = 0;
};

struct FaithfulnessOptions {
    /// Polynomial cross-check on every pair up to this order, and on
    /// `sampled_pairs` random pairs above it.
    size_t full_cross_check_max_k = 3;
    uint64_t sampled_pairs = 1000;
    uint64_t seed = 1;
};

/// Compares the Pauli-model moment matrix with the Weingarten moments on all
/// 4^k x 4^k index pairs; passes iff every entry agrees exactly.
MomentMatrixReport verify_faithfulness(size_t k, const FaithfulnessOptions &options = {});

}  // namespace qperm

#endif
