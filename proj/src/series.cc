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

#include "qperm/series.h"

#include <algorithm>

namespace qperm {

namespace {

Rational unit_constant(const FormalSeries &s, const char *what) {
    if (!s[0].is_constant() || s[0].constant_term() == 0) {
        throw ArithmeticError(std::string(what) + ": constant term must be a nonzero rational");
    }
    return s[0].constant_term();
}

void require_constant_one(const FormalSeries &s, const char *what) {
    if (!(s[0] == Polynomial(1))) {
        throw ArithmeticError(std::string(what) + ": constant term must be 1");
    }
}

void require_zero_constant(const FormalSeries &s, const char *what) {
    if (!s[0].is_zero()) {
        throw ArithmeticError(std::string(what) + ": constant term must be 0");
    }
}

}  // namespace

FormalSeries::FormalSeries(unsigned order) : order_(order), coeffs_(order + 1) {
}

FormalSeries::FormalSeries(unsigned order, std::vector<Polynomial> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
    coeffs_.resize(order + 1);
}

FormalSeries FormalSeries::x(unsigned order) {
    FormalSeries s(order);
    if (order >= 1) {
        s[1] = Polynomial(1);
    }
    return s;
}

FormalSeries FormalSeries::constant(unsigned order, const Polynomial &c) {
    FormalSeries s(order);
    s[0] = c;
    return s;
}

unsigned FormalSeries::valuation() const {
    for (unsigned n = 0; n <= order_; ++n) {
        if (!coeffs_[n].is_zero()) {
            return n;
        }
    }
    return order_ + 1;
}

FormalSeries &FormalSeries::operator+=(const FormalSeries &other) {
    if (other.order_ < order_) {
        *this = truncated(other.order_);
    }
    for (unsigned n = 0; n <= order_; ++n) {
        coeffs_[n] += other.coeffs_[n];
    }
    return *this;
}

FormalSeries &FormalSeries::operator-=(const FormalSeries &other) {
    if (other.order_ < order_) {
        *this = truncated(other.order_);
    }
    for (unsigned n = 0; n <= order_; ++n) {
        coeffs_[n] -= other.coeffs_[n];
    }
    return *this;
}

FormalSeries &FormalSeries::operator*=(const Polynomial &scalar) {
    for (auto &c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

FormalSeries operator*(const FormalSeries &x, const FormalSeries &y) {
    const unsigned order = std::min(x.order_, y.order_);
    FormalSeries r(order);
    for (unsigned i = 0; i <= order; ++i) {
        if (x.coeffs_[i].is_zero()) {
            continue;
        }
        for (unsigned j = 0; i + j <= order; ++j) {
            if (y.coeffs_[j].is_zero()) {
                continue;
            }
            r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return r;
}

FormalSeries FormalSeries::operator-() const {
    FormalSeries r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

FormalSeries FormalSeries::inverse() const {
    const Rational a0_inv = inv(unit_constant(*this, "series inverse"));
    FormalSeries r(order_);
    r[0] = Polynomial(a0_inv);
    for (unsigned n = 1; n <= order_; ++n) {
        Polynomial acc;
        for (unsigned i = 1; i <= n; ++i) {
            if (!coeffs_[i].is_zero()) {
                acc += coeffs_[i] * r[n - i];
            }
        }
        r[n] = acc * Rational(-a0_inv);
    }
    return r;
}

FormalSeries FormalSeries::shifted_up(unsigned shift) const {
    FormalSeries r(order_);
    for (unsigned n = 0; n + shift <= order_; ++n) {
        r[n + shift] = coeffs_[n];
    }
    return r;
}

FormalSeries FormalSeries::shifted_down(unsigned shift) const {
    if (shift > order_) {
        throw ArithmeticError("shift exceeds series order");
    }
    for (unsigned n = 0; n < shift; ++n) {
        if (!coeffs_[n].is_zero()) {
            throw ArithmeticError("series is not divisible by x^" + std::to_string(shift));
        }
    }
    FormalSeries r(order_ - shift);
    for (unsigned n = shift; n <= order_; ++n) {
        r[n - shift] = coeffs_[n];
    }
    return r;
}

FormalSeries FormalSeries::compose(const FormalSeries &g) const {
    require_zero_constant(g, "series composition");
    const unsigned order = std::min(order_, g.order_);
    FormalSeries gt = g.truncated(order);
    // Horner: f_N, then (acc * g + f_n) downwards.
    FormalSeries acc = constant(order, coeffs_[order]);
    for (unsigned n = order; n-- > 0;) {
        acc = acc * gt;
        acc[0] += coeffs_[n];
    }
    return acc;
}

FormalSeries FormalSeries::derivative() const {
    if (order_ == 0) {
        return FormalSeries(0);
    }
    FormalSeries r(order_ - 1);
    for (unsigned n = 1; n <= order_; ++n) {
        r[n - 1] = coeffs_[n] * Rational(n);
    }
    return r;
}

FormalSeries FormalSeries::integral() const {
    FormalSeries r(order_ + 1);
    for (unsigned n = 0; n <= order_; ++n) {
        r[n + 1] = coeffs_[n] * make_rational(1, n + 1);
    }
    return r;
}

FormalSeries FormalSeries::truncated(unsigned order) const {
    FormalSeries r(order);
    for (unsigned n = 0; n <= std::min(order, order_); ++n) {
        r[n] = coeffs_[n];
    }
    return r;
}

FormalSeries FormalSeries::substitute_t(const Rational &value) const {
    FormalSeries r(order_);
    for (unsigned n = 0; n <= order_; ++n) {
        r[n] = coeffs_[n].substitute_t(value);
    }
    return r;
}

std::string FormalSeries::to_string() const {
    std::string out;
    for (unsigned n = 0; n <= order_; ++n) {
        if (coeffs_[n].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + coeffs_[n].to_string() + ")";
        if (n > 0) {
            out += "*x^" + std::to_string(n);
        }
    }
    return (out.empty() ? "0" : out) + " + O(x^" + std::to_string(order_ + 1) + ")";
}

FormalSeries series_sqrt(const FormalSeries &s) {
    require_constant_one(s, "series_sqrt");
    FormalSeries r(s.order());
    r[0] = Polynomial(1);
    const Rational half = make_rational(1, 2);
    for (unsigned n = 1; n <= s.order(); ++n) {
        Polynomial acc = s[n];
        for (unsigned i = 1; i < n; ++i) {
            if (!r[i].is_zero() && !r[n - i].is_zero()) {
                acc -= r[i] * r[n - i];
            }
        }
        r[n] = acc * half;
    }
    return r;
}

FormalSeries series_log(const FormalSeries &s) {
    require_constant_one(s, "series_log");
    if (s.order() == 0) {
        return FormalSeries(0);
    }
    // log(s)' = s'/s
    FormalSeries q = s.derivative() * s.inverse().truncated(s.order() - 1);
    return q.integral();
}

FormalSeries series_exp(const FormalSeries &s) {
    require_zero_constant(s, "series_exp");
    // n E_n = sum_{i=1}^n i s_i E_{n-i}
    FormalSeries r(s.order());
    r[0] = Polynomial(1);
    for (unsigned n = 1; n <= s.order(); ++n) {
        Polynomial acc;
        for (unsigned i = 1; i <= n; ++i) {
            if (!s[i].is_zero()) {
                acc += s[i] * r[n - i] * Rational(i);
            }
        }
        r[n] = acc * make_rational(1, n);
    }
    return r;
}

FormalSeries series_arcsinh(const FormalSeries &s) {
    require_zero_constant(s, "series_arcsinh");
    FormalSeries one = FormalSeries::constant(s.order(), Polynomial(1));
    return series_log(s + series_sqrt(one + s * s));
}

}  // namespace qperm
