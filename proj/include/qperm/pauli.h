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

#ifndef QPERM_PAULI_H
#define QPERM_PAULI_H

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "qperm/poly_matrix.h"

namespace qperm {

/// One of the four quaternion-like Pauli matrices c1..c4 (c1 is the unit,
/// c2^2 = c3^2 = c4^2 = -1, c2 c3 = c4, c3 c4 = c2, c4 c2 = c3).
class PauliIndex {
   public:
    constexpr PauliIndex() = default;
    constexpr explicit PauliIndex(int value) : value_(static_cast<uint8_t>(value)) {
        if (value < 1 || value > 4) {
            throw std::out_of_range("Pauli index must be in 1..4");
        }
    }
    constexpr int value() const {
        return value_;
    }
    /// 0-based position, for table lookups.
    constexpr size_t slot() const {
        return static_cast<size_t>(value_ - 1);
    }
    constexpr bool operator==(const PauliIndex &) const = default;
    constexpr auto operator<=>(const PauliIndex &) const = default;

   private:
    uint8_t value_ = 1;
};

struct SignedPauli {
    int sign = 1;  // +1 or -1
    PauliIndex index;
    bool operator==(const SignedPauli &) const = default;
};

/// c_i c_j = sign * c_m.
SignedPauli pauli_product(PauliIndex i, PauliIndex j);
/// Composes a signed product: (s1 c_i)(s2 c_j).
SignedPauli pauli_product(SignedPauli x, SignedPauli y);
/// c_i^* = +c_1 for i = 1 and -c_i otherwise.
SignedPauli pauli_star(PauliIndex i);

/// A tuple in {1..4}^k. Basis tensors c_{i_1} (x) ... (x) c_{i_k} are keyed by
/// the base-4 code with leg 1 as the most significant digit.
class MultiIndex {
   public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<uint8_t> values);
    MultiIndex(std::initializer_list<int> values);

    static MultiIndex from_code(uint64_t code, size_t k);
    uint64_t code() const;

    size_t size() const {
        return values_.size();
    }
    /// 0-based leg access; returns the value in 1..4.
    int operator[](size_t leg) const {
        return values_[leg];
    }
    PauliIndex at(size_t leg) const {
        return PauliIndex(values_[leg]);
    }
    const std::vector<uint8_t> &values() const {
        return values_;
    }
    std::string to_string() const;

    bool operator==(const MultiIndex &) const = default;
    auto operator<=>(const MultiIndex &) const = default;

   private:
    std::vector<uint8_t> values_;
};

/// 4^k, the number of multi-indices of length k.
uint64_t basis_size(size_t k);

/// Pauli-basis coordinates of c_i x c_j for symbolic x = a c1 + b c2 + c c3
/// + d c4: output slot m carries sign[m] * (coordinate source[m]), where
/// source 0..3 stands for a..d.
struct SignedCoordinateVector {
    std::array<int, 4> sign{};
    std::array<int, 4> source{};

    bool is_signed_permutation() const;
    /// The coordinates as degree-one polynomials.
    std::array<Polynomial, 4> as_polynomials() const;
};

SignedCoordinateVector expand_cxc(PauliIndex i, PauliIndex j);

/// The rank-one projection onto c_i x c_j in the orthonormal Pauli basis:
/// entry (l, m) = v_l v_m with v = expand_cxc(i, j).
PolyMatrix4 projection_matrix(PauliIndex i, PauliIndex j);

}  // namespace qperm

#endif
