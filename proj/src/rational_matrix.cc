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

#include "qperm/rational_matrix.h"

#include <utility>

namespace qperm {

namespace {

/// Integer matrix obtained by scaling each row by the lcm of its
/// denominators. Returns the scale factors through `row_scale`.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix &m,
                                               std::vector<Integer> &row_scale) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    row_scale.assign(m.rows(), 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        row_scale[r] = l;
        for (size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        }
    }
    return out;
}

void exact_divide(Integer &x, const Integer &d) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

}  // namespace

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix operator*(const RationalMatrix &x, const RationalMatrix &y) {
    if (x.cols() != y.rows()) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    RationalMatrix r(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); ++i) {
        for (size_t l = 0; l < x.cols(); ++l) {
            const Rational &xl = x(i, l);
            if (xl == 0) {
                continue;
            }
            for (size_t j = 0; j < y.cols(); ++j) {
                r(i, j) += xl * y(l, j);
            }
        }
    }
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

RationalMatrix inverse(const RationalMatrix &m) {
    const size_t n = m.rows();
    if (m.cols() != n) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    std::vector<Integer> scale;
    auto a = integer_rows(m, scale);
    // Augment with the identity: [A | I].
    for (size_t r = 0; r < n; ++r) {
        a[r].resize(2 * n);
        a[r][n + r] = 1;
    }

    // Fraction-free Gauss-Jordan: after step k every entry is a minor of the
    // augmented matrix, so each division by the previous pivot is exact.
    Integer prev = 1;
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                throw SingularMatrixError("singular matrix: zero pivot column at elimination step " +
                                          std::to_string(k) + " of " + std::to_string(n));
            }
            std::swap(a[k], a[swap]);
        }
        const Integer pivot = a[k][k];
        for (size_t i = 0; i < n; ++i) {
            if (i == k) {
                continue;
            }
            const Integer factor = a[i][k];
            for (size_t j = 0; j < 2 * n; ++j) {
                if (j == k) {
                    continue;
                }
                Integer v = pivot * a[i][j] - factor * a[k][j];
                exact_divide(v, prev);
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = pivot;
    }

    // Now the left block is diag(a[i][i]) and the right block carries the
    // matching rows of the inverse of the scaled matrix.
    RationalMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            inv(i, j) = make_rational(a[i][n + j], a[i][i]);
        }
    }
    // (D A)^{-1} = A^{-1} D^{-1}  =>  A^{-1} = (D A)^{-1} D.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            inv(i, j) *= scale[j];
        }
    }
    return inv;
}

size_t rank(const RationalMatrix &m) {
    std::vector<Integer> scale;
    auto a = integer_rows(m, scale);
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    size_t r = 0;
    Integer prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[r], a[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                exact_divide(v, prev);
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

Rational determinant(const RationalMatrix &m) {
    const size_t n = m.rows();
    if (m.cols() != n) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (n == 0) {
        return 1;
    }
    std::vector<Integer> scale;
    auto a = integer_rows(m, scale);
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                exact_divide(v, prev);
                a[i][j] = std::move(v);
            }
        }
        prev = a[k][k];
    }
    Integer total_scale = 1;
    for (const auto &s : scale) {
        total_scale *= s;
    }
    return make_rational(Integer(sign * a[n - 1][n - 1]), total_scale);
}

}  // namespace qperm
