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

#include <random>

#include "gtest/gtest.h"

using namespace qperm;

namespace {

FormalSeries from(std::vector<Rational> c) {
    std::vector<Polynomial> p(c.begin(), c.end());
    return FormalSeries(static_cast<unsigned>(c.size() - 1), p);
}

}  // namespace

TEST(series, sqrt_of_one_minus_4x) {
    FormalSeries s = series_sqrt(from({1, -4, 0, 0}));
    EXPECT_EQ(s[0], Polynomial(1));
    EXPECT_EQ(s[1], Polynomial(-2));
    EXPECT_EQ(s[2], Polynomial(-2));
    EXPECT_EQ(s[3], Polynomial(-4));
    FormalSeries sq = s * s;
    EXPECT_EQ(sq[1], Polynomial(-4));
    EXPECT_TRUE(sq[2].is_zero());
    EXPECT_TRUE(sq[3].is_zero());
}

TEST(series, arcsinh_cubic_term) {
    FormalSeries a = series_arcsinh(FormalSeries::x(5));
    EXPECT_EQ(a[1], Polynomial(1));
    EXPECT_EQ(a[3], Polynomial(make_rational(-1, 6)));
    EXPECT_EQ(a[5], Polynomial(make_rational(3, 40)));
    EXPECT_TRUE(a[2].is_zero());
}

TEST(series, log_of_one_minus_x) {
    FormalSeries l = series_log(from({1, -1, 0}));
    EXPECT_TRUE(l[0].is_zero());
    EXPECT_EQ(l[1], Polynomial(-1));
    EXPECT_EQ(l[2], Polynomial(make_rational(-1, 2)));
}

TEST(series, wrong_valuation) {
    EXPECT_THROW(series_sqrt(from({2, 1})), ArithmeticError);
    EXPECT_THROW(series_log(from({0, 1})), ArithmeticError);
    EXPECT_THROW(series_arcsinh(from({1, 1})), ArithmeticError);
    EXPECT_THROW(from({0, 1}).inverse(), ArithmeticError);
}

TEST(series, sqrt_squares_back_for_random_series) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-6, 6), d(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> coeffs{1};
        for (int n = 0; n < 8; ++n) {
            coeffs.push_back(make_rational(c(rng), d(rng)));
        }
        FormalSeries s = from(coeffs);
        FormalSeries r = series_sqrt(s);
        FormalSeries back = r * r;
        for (unsigned n = 0; n <= s.order(); ++n) {
            EXPECT_EQ(back[n], s[n]);
        }
        FormalSeries e = series_exp(series_log(s));
        for (unsigned n = 0; n <= s.order(); ++n) {
            EXPECT_EQ(e[n], s[n]);
        }
        FormalSeries one = s * s.inverse();
        EXPECT_EQ(one[0], Polynomial(1));
        for (unsigned n = 1; n <= s.order(); ++n) {
            EXPECT_TRUE(one[n].is_zero());
        }
    }
}

TEST(series, compose_and_shift) {
    // 1/(1-x) composed with 2x gives sum 2^n x^n.
    FormalSeries geo = from({1, 1, 1, 1, 1});
    FormalSeries c = geo.compose(FormalSeries::x(4) * Polynomial(2));
    for (unsigned n = 0; n <= 4; ++n) {
        EXPECT_EQ(c[n], Polynomial(1L << n));
    }
    FormalSeries up = geo.shifted_up(2);
    EXPECT_TRUE(up[1].is_zero());
    EXPECT_EQ(up[2], Polynomial(1));
    EXPECT_EQ(up.shifted_down(2)[0], Polynomial(1));
    EXPECT_THROW(geo.shifted_down(1), ArithmeticError);
}

TEST(series, derivative_and_integral) {
    FormalSeries geo = from({1, 1, 1, 1});
    FormalSeries d = geo.derivative();
    EXPECT_EQ(d[2], Polynomial(3));
    FormalSeries i = d.integral();
    for (unsigned n = 1; n <= 3; ++n) {
        EXPECT_EQ(i[n], Polynomial(1));
    }
}

TEST(series, coefficients_in_t) {
    Polynomial t = Polynomial::variable(Var::T);
    FormalSeries s = series_sqrt(FormalSeries::constant(3, 1) + FormalSeries::x(3) * t);
    EXPECT_EQ(s[1], t * make_rational(1, 2));
    EXPECT_EQ(s.substitute_t(2)[1], Polynomial(1));
}
