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

#ifndef QPERM_RATIONAL_H
#define QPERM_RATIONAL_H

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qperm {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Never use `auto` on a gmpxx arithmetic expression: the
/// result is an unevaluated expression template.
using Rational = mpq_class;

/// Raised for exact-arithmetic domain violations (division by zero, a
/// series without the required constant term, ...).
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer &numerator, const Integer &denominator);

Rational add(const Rational &x, const Rational &y);
Rational mul(const Rational &x, const Rational &y);
Rational neg(const Rational &x);
/// Throws ArithmeticError on zero input.
Rational inv(const Rational &x);

/// "numerator/denominator", always with the slash (e.g. "16/1", "-3/4").
std::string to_string(const Rational &x);
std::string to_string(const Integer &x);

/// Accepts "n/d", "n", or a plain decimal literal such as "0.25".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational &x);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// (2m-1)!! with the convention (-1)!! = 1.
Integer double_factorial_odd(unsigned m);
Rational pow(const Rational &x, unsigned e);

}  // namespace qperm

#endif
