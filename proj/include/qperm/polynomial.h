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

#ifndef QPERM_POLYNOMIAL_H
#define QPERM_POLYNOMIAL_H

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qperm/rational.h"

namespace qperm {

/// Variables of the polynomial ring Q[a,b,c,d,t]. a..d are the sphere
/// coordinates of x = a c1 + b c2 + c c3 + d c4; t is the interpolation
/// parameter of the w_t / v_t families.
enum class Var : uint8_t { A = 0, B = 1, C = 2, D = 3, T = 4 };

inline constexpr size_t kNumVars = 5;

struct Monomial {
    std::array<uint8_t, kNumVars> exps{};

    static Monomial of(unsigned ea, unsigned eb, unsigned ec, unsigned ed, unsigned et = 0);

    unsigned sphere_degree() const;
    unsigned total_degree() const;
    unsigned operator[](Var v) const {
        return exps[static_cast<size_t>(v)];
    }
    /// Product of monomials; throws ArithmeticError above the degree cap.
    Monomial operator*(const Monomial &other) const;

    auto operator<=>(const Monomial &) const = default;
    bool operator==(const Monomial &) const = default;
};

/// Maximum total degree any polynomial product may reach. Exceeding it is
/// a loud error, never a silent truncation.
unsigned degree_cap();
void set_degree_cap(unsigned cap);

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
class Polynomial {
   public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational &constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant);             // NOLINT(google-explicit-constructor)

    static Polynomial variable(Var v);
    static Polynomial monomial(const Monomial &m, const Rational &coefficient = 1);

    const Terms &terms() const {
        return terms_;
    }
    /// Complete (monomial, coefficient) list in monomial order.
    std::vector<std::pair<Monomial, Rational>> term_list() const;

    bool is_zero() const {
        return terms_.empty();
    }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_term() const;
    /// The value of a constant polynomial; throws if any variable appears.
    Rational constant_value() const;
    Rational coefficient(const Monomial &m) const;
    size_t size() const {
        return terms_.size();
    }
    unsigned degree_in(Var v) const;

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const Rational &scalar);

    friend Polynomial operator+(Polynomial x, const Polynomial &y) {
        return x += y;
    }
    friend Polynomial operator-(Polynomial x, const Polynomial &y) {
        return x -= y;
    }
    friend Polynomial operator*(const Polynomial &x, const Polynomial &y);
    friend Polynomial operator*(Polynomial x, const Rational &s) {
        return x *= s;
    }
    friend Polynomial operator*(const Rational &s, Polynomial x) {
        return x *= s;
    }
    Polynomial operator-() const;

    Polynomial pow(unsigned e) const;

    /// Replaces t by a rational value.
    Polynomial substitute_t(const Rational &value) const;
    /// Canonical form modulo a^2+b^2+c^2+d^2 = 1: every d^2 is replaced by
    /// 1 - a^2 - b^2 - c^2 until the d-degree is at most one.
    Polynomial reduce_unit_sphere() const;

    double evaluate(const std::array<double, kNumVars> &point) const;

    /// Human-readable form, e.g. "a^2*b - 1/2*t".
    std::string to_string() const;

    bool operator==(const Polynomial &other) const = default;

   private:
    void add_term(const Monomial &m, const Rational &c);
    Terms terms_;
};

}  // namespace qperm

#endif
