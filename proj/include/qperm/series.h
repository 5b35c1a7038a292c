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

#ifndef QPERM_SERIES_H
#define QPERM_SERIES_H

#include <string>
#include <vector>

#include "qperm/polynomial.h"

namespace qperm {

/// Truncated power series sum_{n=0}^{order} s_n x^n. Coefficients are
/// polynomials so that a free parameter (t) can ride along exactly; plain
/// rational series simply have constant coefficients.
///
/// Every operation is exact through x^order. Binary operations between
/// series of different orders truncate to the smaller one.
class FormalSeries {
   public:
    explicit FormalSeries(unsigned order);
    FormalSeries(unsigned order, std::vector<Polynomial> coefficients);

    /// The series of the indeterminate itself, x.
    static FormalSeries x(unsigned order);
    static FormalSeries constant(unsigned order, const Polynomial &c);

    unsigned order() const {
        return order_;
    }
    const Polynomial &operator[](unsigned n) const {
        return coeffs_[n];
    }
    Polynomial &operator[](unsigned n) {
        return coeffs_[n];
    }
    const std::vector<Polynomial> &coefficients() const {
        return coeffs_;
    }
    /// Index of the first nonzero coefficient (order + 1 for the zero series).
    unsigned valuation() const;

    FormalSeries &operator+=(const FormalSeries &other);
    FormalSeries &operator-=(const FormalSeries &other);
    FormalSeries &operator*=(const Polynomial &scalar);
    friend FormalSeries operator+(FormalSeries x, const FormalSeries &y) {
        return x += y;
    }
    friend FormalSeries operator-(FormalSeries x, const FormalSeries &y) {
        return x -= y;
    }
    friend FormalSeries operator*(FormalSeries x, const Polynomial &s) {
        return x *= s;
    }
    friend FormalSeries operator*(const FormalSeries &x, const FormalSeries &y);
    FormalSeries operator-() const;

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    FormalSeries inverse() const;
    /// Multiplication by x^shift, dropping what falls beyond the order.
    FormalSeries shifted_up(unsigned shift) const;
    /// Division by x^shift; the low coefficients must vanish. The result
    /// has order reduced by `shift`.
    FormalSeries shifted_down(unsigned shift) const;
    /// f(g) for this series f and g with g_0 = 0.
    FormalSeries compose(const FormalSeries &g) const;
    FormalSeries derivative() const;
    /// Antiderivative with zero constant term.
    FormalSeries integral() const;
    FormalSeries truncated(unsigned order) const;
    FormalSeries substitute_t(const Rational &value) const;

    bool operator==(const FormalSeries &other) const = default;
    std::string to_string() const;

   private:
    unsigned order_;
    std::vector<Polynomial> coeffs_;
};

/// Square root of a series with constant term 1.
FormalSeries series_sqrt(const FormalSeries &s);
/// Logarithm of a series with constant term 1.
FormalSeries series_log(const FormalSeries &s);
/// Exponential of a series with zero constant term.
FormalSeries series_exp(const FormalSeries &s);
/// arcsinh(s) = log(s + sqrt(1 + s^2)) for a series with zero constant term.
FormalSeries series_arcsinh(const FormalSeries &s);

}  // namespace qperm

#endif
