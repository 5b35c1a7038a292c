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

#include "qperm/rational.h"

#include <cctype>

namespace qperm {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer &numerator, const Integer &denominator) {
    if (denominator == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

Rational add(const Rational &x, const Rational &y) {
    return Rational(x + y);
}

Rational mul(const Rational &x, const Rational &y) {
    return Rational(x * y);
}

Rational neg(const Rational &x) {
    return Rational(-x);
}

Rational inv(const Rational &x) {
    if (x == 0) {
        throw ArithmeticError("inverse of zero");
    }
    return Rational(1 / x);
}

std::string to_string(const Rational &x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer &x) {
    return x.get_str();
}

static bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto bad = [&]() {
        return std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw bad();
        }
        Integer d{std::string(den)};
        if (d == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        result = make_rational(Integer(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty())) {
            throw bad();
        }
        Integer den = 1;
        for (size_t i = 0; i < frac.size(); ++i) {
            den *= 10;
        }
        Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac));
        result = make_rational(num, den);
    } else {
        if (!all_digits(body)) {
            throw bad();
        }
        result = Rational(Integer(std::string(body)));
    }
    if (negative) {
        result = -result;
    }
    return result;
}

double to_double(const Rational &x) {
    return x.get_d();
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer double_factorial_odd(unsigned m) {
    // (2m-1)!! = (2m)! / (2^m m!)
    Integer r = 1;
    for (unsigned i = 1; i <= m; ++i) {
        r *= 2 * i - 1;
    }
    return r;
}

Rational pow(const Rational &x, unsigned e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
    return Rational(num, den);
}

}  // namespace qperm
