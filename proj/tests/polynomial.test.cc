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

#include "qperm/polynomial.h"

#include <random>

#include "gtest/gtest.h"
#include "qperm/poly_matrix.h"

using namespace qperm;

namespace {

Polynomial var(Var v) {
    return Polynomial::variable(v);
}

Polynomial random_poly(std::mt19937_64 &rng) {
    std::uniform_int_distribution<unsigned> e(0, 2);
    std::uniform_int_distribution<long> c(-5, 5);
    Polynomial p;
    for (int n = 0; n < 4; ++n) {
        p += Polynomial::monomial(Monomial::of(e(rng), e(rng), e(rng), e(rng)), make_rational(c(rng), 1 + e(rng)));
    }
    return p;
}

}  // namespace

TEST(polynomial, expansion_term_list) {
    Polynomial a2 = var(Var::A) * var(Var::A), b2 = var(Var::B) * var(Var::B);
    auto terms = (a2 + b2).pow(2).term_list();
    ASSERT_EQ(terms.size(), 3u);
    Polynomial p = (a2 + b2).pow(2);
    EXPECT_EQ(p.coefficient(Monomial::of(4, 0, 0, 0)), 1);
    EXPECT_EQ(p.coefficient(Monomial::of(2, 2, 0, 0)), 2);
    EXPECT_EQ(p.coefficient(Monomial::of(0, 4, 0, 0)), 1);
}

TEST(polynomial, zero_and_single_term) {
    EXPECT_TRUE(Polynomial().term_list().empty());
    EXPECT_TRUE((var(Var::A) - var(Var::A)).is_zero());
    Polynomial l = Polynomial::monomial(Monomial::of(2, 2, 2, 2), 3);
    auto terms = l.term_list();
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].second, 3);
}

TEST(polynomial, multiplication_matches_convolution) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial x = random_poly(rng), y = random_poly(rng);
        Polynomial expected;
        for (const auto &[mx, cx] : x.term_list()) {
            for (const auto &[my, cy] : y.term_list()) {
                expected += Polynomial::monomial(mx * my, cx * cy);
            }
        }
        EXPECT_EQ(x * y, expected);
        EXPECT_EQ(x * y, y * x);
    }
}

TEST(polynomial, evaluate) {
    Polynomial p = var(Var::A) * var(Var::B) * Rational(3) + var(Var::T);
    EXPECT_DOUBLE_EQ(p.evaluate({2, 5, 0, 0, 1}), 31.0);
}

TEST(polynomial, reduce_unit_sphere) {
    Polynomial norm = var(Var::A).pow(2) + var(Var::B).pow(2) + var(Var::C).pow(2) + var(Var::D).pow(2);
    EXPECT_EQ(norm.reduce_unit_sphere(), Polynomial(1));
    EXPECT_EQ((norm.pow(3) - Polynomial(1)).reduce_unit_sphere(), Polynomial());
}

TEST(polynomial, substitute_t) {
    Polynomial t = var(Var::T);
    Polynomial p = (Polynomial(1) - t * t) * var(Var::A);
    EXPECT_EQ(p.substitute_t(make_rational(1, 2)), var(Var::A) * make_rational(3, 4));
    EXPECT_EQ(p.degree_in(Var::T), 2u);
}

TEST(polynomial, degree_cap_is_loud) {
    unsigned saved = degree_cap();
    set_degree_cap(4);
    EXPECT_THROW(var(Var::A).pow(5), ArithmeticError);
    set_degree_cap(saved);
    EXPECT_NO_THROW(var(Var::A).pow(5));
}

TEST(polynomial, constant_value) {
    EXPECT_EQ(Polynomial(make_rational(2, 3)).constant_value(), make_rational(2, 3));
    EXPECT_THROW(var(Var::A).constant_value(), ArithmeticError);
}

TEST(poly_matrix, trace_and_products) {
    PolyMatrix4 id = PolyMatrix4::identity();
    EXPECT_EQ(id.trace(), Polynomial(4));
    EXPECT_EQ(id * id, id);
    PolyMatrix4 m;
    m(0, 1) = var(Var::A);
    EXPECT_EQ((m * m).trace(), Polynomial());
    EXPECT_EQ(m.transpose()(1, 0), var(Var::A));
}
