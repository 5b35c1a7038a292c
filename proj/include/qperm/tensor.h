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

#ifndef QPERM_TENSOR_H
#define QPERM_TENSOR_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qperm/partition.h"
#include "qperm/pauli.h"
#include "qperm/poly_matrix.h"
#include "qperm/rational_matrix.h"

namespace qperm {

/// An element of M_2^{(x)k} in the Pauli product basis. Coordinates are
/// keyed by MultiIndex::code(); zero coordinates are never stored.
class PauliTensor {
   public:
    using Coefficients = std::map<uint64_t, Rational>;

    PauliTensor() = default;
    explicit PauliTensor(size_t k) : k_(k) {
        basis_size(k);
    }

    static PauliTensor basis(const MultiIndex &i, const Rational &coefficient = 1);
    /// c_1 (x) ... (x) c_1.
    static PauliTensor unit(size_t k);

    size_t legs() const {
        return k_;
    }
    const Coefficients &coefficients() const {
        return coeffs_;
    }
    size_t size() const {
        return coeffs_.size();
    }
    bool is_zero() const {
        return coeffs_.empty();
    }
    Rational coefficient(const MultiIndex &i) const;
    Rational coefficient(uint64_t code) const;

    /// Adds `value` to the coordinate `code`.
    void add(uint64_t code, const Rational &value);

    PauliTensor &operator+=(const PauliTensor &other);
    PauliTensor &operator-=(const PauliTensor &other);
    PauliTensor &operator*=(const Rational &scalar);
    friend PauliTensor operator+(PauliTensor x, const PauliTensor &y) {
        return x += y;
    }
    friend PauliTensor operator-(PauliTensor x, const PauliTensor &y) {
        return x -= y;
    }
    friend PauliTensor operator*(PauliTensor x, const Rational &s) {
        return x *= s;
    }

    bool operator==(const PauliTensor &other) const = default;
    std::string to_string() const;

   private:
    size_t k_ = 0;
    Coefficients coeffs_;
};

/// Sum of coordinate products; the Pauli basis is orthonormal for the
/// normalized-trace pairing.
Rational scalar_product(const PauliTensor &u, const PauliTensor &v);

/// R on a basis element: R(c_i) = (sign/2) c_m with
/// m_l = index of c_{i_l} c_{i_{l+1}}^* (cyclic).
struct RImage {
    int sign = 1;
    uint64_t code = 0;
};
RImage r_image(uint64_t code, size_t k);
/// All basis codes i with R(c_i) proportional to c_m, with their signs.
/// Either empty or exactly four entries.
std::vector<RImage> r_preimages(uint64_t code, size_t k);

PauliTensor apply_R(const PauliTensor &v);
PauliTensor apply_R_star(const PauliTensor &v);

/// f = c1(x)c1 - c2(x)c2 - c3(x)c3 - c4(x)c4.
PauliTensor f_element();

/// Product in the algebra M_2^{(x)k}, leg by leg.
PauliTensor tensor_multiply(const PauliTensor &u, const PauliTensor &v);

/// Places v on the given 1-based legs (sorted, distinct) and c1 elsewhere.
PauliTensor leg_embed(const PauliTensor &v, const std::vector<int> &positions, size_t k);

/// c_p = sum of c_j over multi-indices j with delta(p, j) = 1.
PauliTensor c_p_vector(const NCPartition &p);

/// omega(p) = 2 * product over blocks {j1 < ... < jm} of
/// f_{j1 j2} f_{j2 j3} ... f_{j(m-1) jm}.
PauliTensor omega(const NCPartition &p);

/// A dense 4^k x 4^k rational operator in the Pauli basis.
class TensorOperator {
   public:
    TensorOperator() = default;
    explicit TensorOperator(size_t k) : k_(k), matrix_(basis_size(k), basis_size(k)) {
    }
    TensorOperator(size_t k, RationalMatrix matrix);

    size_t legs() const {
        return k_;
    }
    const RationalMatrix &matrix() const {
        return matrix_;
    }
    Rational &operator()(uint64_t row, uint64_t col) {
        return matrix_(row, col);
    }
    const Rational &operator()(uint64_t row, uint64_t col) const {
        return matrix_(row, col);
    }
    PauliTensor apply(const PauliTensor &v) const;
    bool operator==(const TensorOperator &other) const = default;

   private:
    size_t k_ = 0;
    RationalMatrix matrix_;
};

/// Orthogonal projection onto span{omega(p) : p in NC(k)}, built from the
/// inverse of the exact Gram matrix of the omega vectors.
class FixedPointProjection {
   public:
    /// Throws SingularMatrixError if the omega vectors are dependent.
    explicit FixedPointProjection(size_t k);

    size_t legs() const {
        return k_;
    }
    const std::vector<NCPartition> &partitions() const {
        return partitions_;
    }
    const std::vector<PauliTensor> &omegas() const {
        return omegas_;
    }
    const RationalMatrix &omega_gram() const {
        return gram_;
    }
    const RationalMatrix &omega_gram_inverse() const {
        return gram_inv_;
    }

    PauliTensor apply(const PauliTensor &v) const;
    /// <E c_n, c_m>.
    Rational entry(uint64_t m, uint64_t n) const;
    /// Sum of diagonal entries, which is the rank of a projection.
    Rational trace() const;
    TensorOperator dense() const;

   private:
    size_t k_;
    std::vector<NCPartition> partitions_;
    std::vector<PauliTensor> omegas_;
    RationalMatrix gram_;
    RationalMatrix gram_inv_;
    // weighted_[p] holds the coordinates of sum_q Ginv(p, q) omega(q).
    std::vector<std::map<uint64_t, Rational>> weighted_;
};

/// Pauli-basis matrix of the single-leg adjoint action:
/// x c_j x^* = sum_m rho(m, j) c_m, entries quadratic in a, b, c, d.
PolyMatrix4 adjoint_rotation();

/// E by exact Haar integration of the k-fold tensor power of the adjoint
/// action. Cost grows as 16^k; intended for k <= 4.
TensorOperator E_via_integration(size_t k, unsigned threads = 1);

/// R^* E R with E from the omega Gram matrix; columns of E are cached so
/// repeated application stays cheap.
class RStarER {
   public:
    explicit RStarER(const FixedPointProjection &E) : E_(E) {
    }
    PauliTensor apply(const PauliTensor &v) const;
    /// <R^* E R c_j, c_i>.
    Rational entry(uint64_t i, uint64_t j) const;

   private:
    const PauliTensor &E_column(uint64_t m) const;

    const FixedPointProjection &E_;
    mutable std::map<uint64_t, PauliTensor> cache_;
};

/// Orthogonal projection onto span{c_p : p in NC(k)} applied to v, built
/// from the inverse of the c_p Gram matrix.
PauliTensor c_span_projection(const PauliTensor &v, const std::vector<NCPartition> &nc,
                              const RationalMatrix &gram_inverse);

}  // namespace qperm

#endif
