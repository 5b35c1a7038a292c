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

#include "qperm/laws.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qperm/partition.h"

using namespace qperm;

namespace {

VariableSpec var(const char *name) {
    return VariableSpec::parse(name);
}

VariableSpec var(const char *name, Rational t) {
    return VariableSpec::parse(name, t);
}

double free_poisson_density(double x) {
    return 2 / std::numbers::pi * std::sqrt((1 - x) / x);
}

}  // namespace

TEST(laws, parse) {
    EXPECT_EQ(var("M3").kind, VariableKind::M3);
    EXPECT_EQ(var("wt").name(), "wt");
    EXPECT_TRUE(var("vt").has_parameter());
    EXPECT_FALSE(var("n3").has_parameter());
    EXPECT_THROW(var("m5"), std::invalid_argument);
}

TEST(laws, model_matrices) {
    EXPECT_EQ(model_matrix(var("m4")).trace().reduce_unit_sphere(), Polynomial(1));
    EXPECT_EQ(model_matrix(var("m2")).trace().reduce_unit_sphere(), Polynomial(1));
    EXPECT_EQ(model_matrix(var("n3")), model_matrix(var("m3")).scaled(Polynomial(3)));
    EXPECT_EQ(model_matrix(var("wt", 1)), model_matrix(var("m1")));
    EXPECT_EQ(model_matrix(var("vt", 0)), model_matrix(var("m4")));
    EXPECT_EQ(model_matrix_symbolic(VariableKind::Wt).substitute_t(0), model_matrix(var("m2")));
    EXPECT_THROW(model_matrix(var("wt")), std::invalid_argument);
    for (const char *name : {"m1", "m2", "m3", "m4"}) {
        PolyMatrix4 m = model_matrix(var(name));
        EXPECT_TRUE(m == m.transpose()) << name;
    }
}

TEST(laws, exact_moments) {
    for (unsigned k = 1; k <= 8; ++k) {
        EXPECT_EQ(exact_moment(var("m1"), k), make_rational(1, 4));
        EXPECT_EQ(exact_moment(var("m2"), k), make_rational(1, 2 * (k + 1)));
        EXPECT_EQ(exact_moment(var("m4"), k), Rational(catalan(k)) / Rational(Integer(1) << (2 * k)));
        EXPECT_EQ(exact_moment(var("wt", 0), k), exact_moment(var("m2"), k));
        EXPECT_EQ(exact_moment(var("vt", 1), k), exact_moment(var("m2"), k));
    }
    EXPECT_EQ(exact_moment(var("m3"), 1), make_rational(1, 4));
    EXPECT_EQ(exact_moment(var("m3"), 2), make_rational(5, 36));
    EXPECT_EQ(exact_moment(var("n3"), 2), make_rational(5, 4));
    EXPECT_EQ(m3_comparison_moment(2), make_rational(15, 32));
    EXPECT_NE(exact_moment(var("m3"), 2), m3_comparison_moment(2));
    EXPECT_THROW(exact_moment(var("wt"), 2), std::invalid_argument);
    EXPECT_THROW(exact_moments(var("m1"), 13), std::out_of_range);
    EXPECT_THROW(exact_moments(var("m1"), 5, 4), std::out_of_range);
}

TEST(laws, symbolic_moments) {
    auto m = exact_moments(var("wt"), 3);
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m[0], Polynomial(make_rational(1, 4)));
    for (long t : {-1L, 0L, 1L, 3L}) {
        for (unsigned k = 1; k <= 3; ++k) {
            EXPECT_EQ(m[k - 1].substitute_t(t), Polynomial(exact_moment(var("wt", t), k)));
        }
    }
}

TEST(laws, averaged_law) {
    for (int s : {1, 2, 4}) {
        SpectralLaw law = averaged_law(s);
        EXPECT_EQ(law.total_mass(), 1);
        const char *name = s == 1 ? "m1" : s == 2 ? "m2" : "m4";
        for (unsigned k = 1; k <= 8; ++k) {
            EXPECT_EQ(law.moment(k), exact_moment(var(name), k)) << s << " " << k;
        }
    }
    EXPECT_THROW(averaged_law(3), std::invalid_argument);
    EXPECT_THROW(averaged_law(5), std::invalid_argument);
    EXPECT_NEAR(averaged_law(2).density(0.3), 0.5, 1e-15);
    EXPECT_NEAR(averaged_law(4).density(0.3), free_poisson_density(0.3), 1e-14);
}

TEST(laws, charpoly) {
    auto c1 = charpoly(var("m1"));
    ASSERT_EQ(c1.size(), 5u);
    std::vector<Polynomial> expect1{0, 0, 0, -1, 1};
    EXPECT_EQ(c1, expect1);
    Polynomial prod = 1;
    for (Var v : {Var::A, Var::B, Var::C, Var::D}) prod *= Polynomial::variable(v).pow(2);
    auto c4 = charpoly(var("m4"));
    EXPECT_EQ(c4[0], prod.reduce_unit_sphere());
    EXPECT_EQ(c4[3], Polynomial(-1));
    auto c3 = charpoly(var("m3"));
    EXPECT_TRUE(c3[0].is_zero());
    EXPECT_EQ(c3[3], Polynomial(-1));
    for (const char *name : {"m2", "n3"}) {
        auto c = charpoly(var(name));
        EXPECT_EQ(c[4], Polynomial(1));
        EXPECT_TRUE(c[0].is_zero()) << name;
    }
}

TEST(laws, cauchy_closed) {
    EXPECT_NEAR(cauchy_closed(var("m4"), 2.0).real(), 2 - std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(cauchy_closed(var("m1"), 2.0) - Complex(0.75 / 2 + 0.25)), 0, 1e-15);
    EXPECT_THROW(cauchy_closed(var("m4"), 0.5), std::domain_error);
    EXPECT_THROW(cauchy_closed(var("m1"), 0.0), std::domain_error);
    EXPECT_THROW(cauchy_closed(var("m3"), 2.0), std::invalid_argument);
    EXPECT_THROW(cauchy_closed(var("wt"), 2.0), std::invalid_argument);
    EXPECT_THROW(cauchy_series(var("m3"), 6), std::invalid_argument);
    // Far away, G behaves like 1/xi.
    EXPECT_NEAR(std::abs(cauchy_closed(var("m2"), Complex(0, 1e6)) * Complex(0, 1e6) - 1.0), 0, 1e-6);
    // Finite-difference check of the derivative.
    Complex xi(0.4, 0.7), h(1e-6, 0);
    for (const char *name : {"m1", "m2", "m4"}) {
        Complex fd = (cauchy_closed(var(name), xi + h) - cauchy_closed(var(name), xi - h)) / (2.0 * h);
        EXPECT_NEAR(std::abs(fd - cauchy_closed_derivative(var(name), xi)), 0, 1e-7) << name;
    }
}

TEST(laws, series_match_moments) {
    const unsigned order = 12;
    for (const char *name : {"m1", "m2", "m4"}) {
        FormalSeries g = cauchy_series(var(name), order);
        EXPECT_EQ(g[0], Polynomial(0));
        EXPECT_EQ(g[1], Polynomial(1));
        for (unsigned k = 1; k + 1 <= order && k <= 9; ++k) {
            EXPECT_EQ(g[k + 1], Polynomial(exact_moment(var(name), k))) << name << " " << k;
        }
    }
    EXPECT_EQ(cauchy_series(var("m1"), order), g1_series(order));
    EXPECT_EQ(cauchy_series(var("m2"), order), g2_series(order));
    EXPECT_EQ(cauchy_series(var("m4"), order), g4_series(order));
    auto wt = cauchy_series(var("wt", make_rational(1, 3)), order);
    for (unsigned k = 1; k < order; ++k) {
        EXPECT_EQ(wt[k + 1], Polynomial(exact_moment(var("wt", make_rational(1, 3)), k)));
    }
    FormalSeries vt = cauchy_series(var("vt", make_rational(1, 2)), order);
    std::vector<Polynomial> g(order + 1);
    g[1] = 1;
    for (unsigned k = 1; k + 1 <= order; ++k) g[k + 1] = exact_moment(var("vt", make_rational(1, 2)), k);
    EXPECT_EQ(vt, xi_derivative(FormalSeries(order, g)).truncated(order));
}

TEST(laws, block_cauchy_series) {
    const unsigned order = 10;
    auto idempotent = [](unsigned, unsigned p) { return Polynomial(p == 0 ? 1 : 0); };
    std::vector<Polynomial> expect(order + 1);
    expect[1] = 1;
    for (unsigned n = 2; n <= order; ++n) expect[n] = make_rational(1, 2);
    EXPECT_EQ(block_cauchy_series(idempotent, order), FormalSeries(order, expect));
    auto reflection = [](unsigned q, unsigned p) {
        return Polynomial(q > 0 ? 0 : (p % 2 ? -1 : 1));
    };
    std::vector<Polynomial> odd(order + 1);
    for (unsigned n = 1; n <= order; n += 2) odd[n] = 1;
    EXPECT_EQ(block_cauchy_series(reflection, order), FormalSeries(order, odd));
}

TEST(laws, densities) {
    DensityPoint half = stieltjes_density_at(var("wt", 0), 0.5);
    EXPECT_TRUE(half.converged);
    EXPECT_NEAR(half.density, 0.5, 1e-4);
    for (double x : {0.1, 0.35, 0.8}) {
        DensityPoint p = stieltjes_density_at(var("m4"), x);
        EXPECT_NEAR(p.density, free_poisson_density(x), 1e-6) << x;
        DensityPoint v = stieltjes_density_at(var("vt", 0), x);
        EXPECT_NEAR(v.density, free_poisson_density(x), 1e-6) << x;
        EXPECT_NEAR(stieltjes_density_at(var("vt", 1), x).density, 0.5, 1e-6) << x;
    }
    EXPECT_NEAR(stieltjes_density_at(var("wt", make_rational(1, 2)), 0.5).density, 0, 1e-6);
    auto grid = stieltjes_density(var("m2"), 0.1, 0.9, 5);
    ASSERT_EQ(grid.size(), 5u);
    EXPECT_DOUBLE_EQ(grid[0].x, 0.1);
    EXPECT_DOUBLE_EQ(grid[4].x, 0.9);
    EXPECT_THROW(stieltjes_density(var("m2"), 0.5, 0.4, 3), std::invalid_argument);
    EXPECT_THROW(stieltjes_density_at(var("m3"), 0.5), std::invalid_argument);
}

TEST(laws, cauchy_transform_vt) {
    // At v_1 = M2 the contour result must match the closed form of M2.
    for (Complex xi : {Complex(0.5, 0.3), Complex(-0.2, 0.05), Complex(3, 1)}) {
        EXPECT_NEAR(std::abs(cauchy_transform(var("vt", 1), xi) - cauchy_closed(var("m2"), xi)), 0, 1e-9);
        EXPECT_NEAR(std::abs(cauchy_transform(var("vt", 0), xi) - cauchy_closed(var("m4"), xi)), 0, 1e-9);
    }
}

TEST(laws, atoms) {
    EXPECT_NEAR(atom_mass(var("wt", 0), 0).density, 0.5, 1e-4);
    EXPECT_NEAR(atom_mass(var("m1"), 0).density, 0.75, 1e-4);
    EXPECT_NEAR(atom_mass(var("m1"), 1).density, 0.25, 1e-4);
    EXPECT_NEAR(atom_mass(var("m4"), 0.5).density, 0, 1e-3);
}

TEST(laws, jacobi) {
    std::array<double, 4> ev;
    ASSERT_TRUE(jacobi_eigenvalues({2, 0, 0, 0, 0, -1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0}, ev));
    std::sort(ev.begin(), ev.end());
    EXPECT_EQ(ev, (std::array<double, 4>{-1, 0, 2, 3}));
    ASSERT_TRUE(jacobi_eigenvalues({2, 1, 0, 0, 1, 2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1}, ev));
    std::sort(ev.begin(), ev.end());
    EXPECT_NEAR(ev[0], 0, 1e-13);
    EXPECT_NEAR(ev[1], 1, 1e-13);
    EXPECT_NEAR(ev[2], 2, 1e-13);
    EXPECT_NEAR(ev[3], 3, 1e-13);
}

TEST(laws, monte_carlo) {
    McLawOptions options;
    options.samples = 40000;
    options.seed = 17;
    McLawResult w0 = mc_law(var("wt", 0), options);
    EXPECT_EQ(w0.samples, 40000u);
    EXPECT_NEAR(w0.zero_fraction, 0.5, 1e-9);
    McLawResult m4 = mc_law(var("m4"), options);
    EXPECT_EQ(m4.rejected, 0u);
    ASSERT_EQ(m4.moments.size(), 4u);
    for (unsigned k = 1; k <= 4; ++k) {
        double exact = to_double(exact_moment(var("m4"), k));
        EXPECT_NEAR(m4.moments[k - 1].mean, exact, 4 * m4.moments[k - 1].standard_error() + 1e-12) << k;
    }
    uint64_t counted = m4.eigenvalues_below_range + m4.eigenvalues_above_range;
    for (uint64_t h : m4.histogram) counted += h;
    EXPECT_EQ(counted, 4 * m4.samples);
    options.threads = 3;
    McLawResult again = mc_law(var("m4"), options);
    EXPECT_EQ(again.moments[1].mean, m4.moments[1].mean);
    EXPECT_EQ(again.histogram, m4.histogram);
}
