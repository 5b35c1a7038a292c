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

#ifndef QPERM_RATIONAL_MATRIX_H
#define QPERM_RATIONAL_MATRIX_H

#include <stdexcept>
#include <string>
#include <vector>

#include "qperm/rational.h"

namespace qperm {

/// Raised when an exact elimination meets a zero pivot column. The message
/// names the elimination step and the matrix size.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }

    static RationalMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Rational &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Rational &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    friend RationalMatrix operator*(const RationalMatrix &x, const RationalMatrix &y);
    RationalMatrix transpose() const;
    bool is_symmetric() const;

    bool operator==(const RationalMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination on the
/// row-scaled integer matrix. Throws SingularMatrixError on a zero pivot.
RationalMatrix inverse(const RationalMatrix &m);

/// Exact rank by fraction-free elimination.
size_t rank(const RationalMatrix &m);

/// Exact determinant (fraction-free elimination).
Rational determinant(const RationalMatrix &m);

}  // namespace qperm

#endif
