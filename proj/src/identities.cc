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

#include "qperm/identities.h"

#include <stdexcept>

namespace qperm {

IdentitySides binomial_sum_identity(unsigned p, unsigned q) {
    if (p + q == 0) {
        throw std::invalid_argument("binomial_sum_identity needs p + q > 0");
    }
    IdentitySides out;
    for (unsigned m = 0; 2 * p + 2 * m <= 2 * p + q; ++m) {
        out.lhs += Rational(binomial(2 * p + q, 2 * p + 2 * m) * binomial(p + m, p));
    }
    Rational two_pow = q >= 1 ? pow(Rational(2), q - 1) : make_rational(1, 2);
    out.rhs = two_pow * make_rational(2 * p + q, p + q) * Rational(binomial(p + q, q));
    return out;
}

IdentitySides factorial_sum_identity(unsigned p, unsigned q) {
    IdentitySides out;
    for (unsigned r = 0; r <= q; ++r) {
        Integer num = factorial(2 * p + 2 * r) * factorial(2 * p + 2 * q - 2 * r);
        Integer den = factorial(r) * factorial(q - r) * factorial(p + r) * factorial(p + q - r);
        out.lhs += make_rational(num, den);
    }
    Integer num = factorial(2 * p) * factorial(2 * p + q);
    Integer den = factorial(p) * factorial(p);
    out.rhs = pow(Rational(4), q) / Rational(factorial(q)) * make_rational(num, den);
    return out;
}

std::pair<FormalSeries, FormalSeries> generating_series_identity(unsigned p, unsigned order) {
    if (p == 0) {
        throw std::invalid_argument("generating_series_identity needs p >= 1");
    }
    FormalSeries lhs(order);
    for (unsigned q = 0; p + q <= order; ++q) {
        lhs[p + q] = Rational(make_rational(2 * p + q, p + q) * Rational(binomial(p + q, p)));
    }
    const FormalSeries one = FormalSeries::constant(order, 1);
    const FormalSeries u = FormalSeries::x(order);
    FormalSeries inv = (one - u).inverse();
    FormalSeries rhs = FormalSeries::constant(order, 2) - u;
    for (unsigned n = 0; n < p; ++n) {
        rhs = rhs * u;
    }
    for (unsigned n = 0; n <= p; ++n) {
        rhs = rhs * inv;
    }
    return {lhs, rhs};
}

std::pair<FormalSeries, FormalSeries> central_binomial_identity(unsigned order) {
    FormalSeries lhs(order);
    for (unsigned n = 0; n <= order; ++n) {
        lhs[n] = Rational(binomial(2 * n, n));
    }
    FormalSeries x = FormalSeries::x(order);
    FormalSeries rhs =
        series_sqrt(FormalSeries::constant(order, 1) - x * Polynomial(4)).inverse();
    return {lhs, rhs};
}

IdentityReport verify_standard_identities(unsigned max_pq, unsigned order) {
    IdentityReport report;
    auto note = [&](bool ok, const std::string &what) {
        ++report.checked;
        if (!ok) {
            ++report.failed;
            if (report.first_failure.empty()) {
                report.first_failure = what;
            }
        }
    };
    auto series_equal = [](const std::pair<FormalSeries, FormalSeries> &s) {
        for (unsigned n = 0; n <= s.first.order(); ++n) {
            if (!(s.first[n] - s.second[n]).is_zero()) {
                return false;
            }
        }
        return true;
    };
    for (unsigned p = 0; p <= max_pq; ++p) {
        for (unsigned q = 0; q <= max_pq; ++q) {
            std::string at = " at p=" + std::to_string(p) + ", q=" + std::to_string(q);
            if (p + q > 0) {
                note(binomial_sum_identity(p, q).holds(), "binomial sum" + at);
            }
            note(factorial_sum_identity(p, q).holds(), "factorial sum" + at);
        }
    }
    for (unsigned p = 1; p <= max_pq; ++p) {
        note(series_equal(generating_series_identity(p, order)),
             "generating series at p=" + std::to_string(p));
    }
    note(series_equal(central_binomial_identity(order)), "central binomial series");
    return report;
}

}  // namespace qperm
