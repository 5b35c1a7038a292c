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

#include "qperm/tensor.h"

#include <random>

#include "gtest/gtest.h"
#include "qperm/sphere.h"
#include "qperm/weingarten.h"

using namespace qperm;

namespace {

PauliTensor basis(std::initializer_list<int> i, Rational c = 1) {
    return PauliTensor::basis(MultiIndex(i), c);
}

PauliTensor random_tensor(std::mt19937_64 &rng, size_t k) {
    std::uniform_int_distribution<uint64_t> code(0, basis_size(k) - 1);
    std::uniform_int_distribution<long> c(-4, 4);
    PauliTensor v(k);
    for (int n = 0; n < 6; ++n) {
        v.add(code(rng), make_rational(c(rng), 3));
    }
    return v;
}

/// j = i (+) s: every leg multiplied on the right by c_s.
MultiIndex shift(const MultiIndex &i, int s) {
    std::vector<uint8_t> out;
    for (size_t l = 0; l < i.size(); ++l) {
        out.push_back(pauli_product(i.at(l), PauliIndex(s)).index.value());
    }
    return MultiIndex(out);
}

}  // namespace

TEST(tensor, scalar_products) {
    EXPECT_EQ(scalar_product(basis({1, 2}), basis({1, 2})), 1);
    EXPECT_EQ(scalar_product(basis({1, 2}), basis({2, 1})), 0);
    EXPECT_EQ(scalar_product(f_element(), f_element()), 4);
    NCPartition p = NCPartition::parse("{1,3}{2}");
    for (uint64_t code = 0; code < 64; ++code) {
        MultiIndex j = MultiIndex::from_code(code, 3);
        EXPECT_EQ(scalar_product(c_p_vector(p), PauliTensor::basis(j)), delta(p, j));
    }
    EXPECT_THROW(scalar_product(basis({1}), basis({1, 1})), std::invalid_argument);
}

TEST(tensor, apply_R_examples) {
    for (int i = 1; i <= 4; ++i) {
        EXPECT_EQ(apply_R(basis({i})), basis({1}, make_rational(1, 2)));
    }
    EXPECT_EQ(apply_R(basis({2, 3})), basis({4, 4}, make_rational(-1, 2)));
    for (size_t k = 1; k <= 5; ++k) {
        EXPECT_EQ(apply_R(c_p_vector(SetPartition::one_block(k))), PauliTensor::unit(k) * Rational(2));
    }
}

TEST(tensor, R_is_four_to_one) {
    for (size_t k = 1; k <= 4; ++k) {
        std::vector<int> hits(basis_size(k));
        for (uint64_t code = 0; code < basis_size(k); ++code) {
            PauliTensor r = apply_R(PauliTensor::basis(MultiIndex::from_code(code, k)));
            ASSERT_EQ(r.size(), 1u);
            const Rational &c = r.coefficients().begin()->second;
            EXPECT_TRUE(c == make_rational(1, 2) || c == make_rational(-1, 2));
            ++hits[r.coefficients().begin()->first];
        }
        for (int h : hits) {
            EXPECT_TRUE(h == 0 || h == 4);
        }
    }
}

TEST(tensor, pairing_law_and_delta_transport) {
    for (size_t k = 1; k <= 4; ++k) {
        auto nc = enumerate_nc(k);
        for (uint64_t a = 0; a < basis_size(k); ++a) {
            MultiIndex i = MultiIndex::from_code(a, k);
            PauliTensor ri = apply_R(PauliTensor::basis(i));
            std::vector<uint64_t> partners;
            for (int s = 1; s <= 4; ++s) {
                MultiIndex j = shift(i, s);
                partners.push_back(j.code());
                EXPECT_EQ(scalar_product(ri, apply_R(PauliTensor::basis(j))), make_rational(1, 4));
                for (const auto &p : nc) {
                    EXPECT_EQ(delta(p, i), delta(p, j));
                }
            }
            for (uint64_t b = 0; b < basis_size(k); b += 7) {
                bool partner = std::find(partners.begin(), partners.end(), b) != partners.end();
                Rational x = scalar_product(ri, apply_R(PauliTensor::basis(MultiIndex::from_code(b, k))));
                EXPECT_EQ(x, partner ? make_rational(1, 4) : Rational(0));
            }
        }
    }
}

TEST(tensor, R_star_is_adjoint) {
    std::mt19937_64 rng(23);
    for (size_t k = 1; k <= 4; ++k) {
        for (int trial = 0; trial < 20; ++trial) {
            PauliTensor u = random_tensor(rng, k), v = random_tensor(rng, k);
            EXPECT_EQ(scalar_product(apply_R_star(u), v), scalar_product(u, apply_R(v)));
        }
    }
    PauliTensor expected(1);
    for (int i = 1; i <= 4; ++i) expected += basis({i}, make_rational(1, 2));
    EXPECT_EQ(apply_R_star(basis({1})), expected);
    // At k=1 the image of R is c_1 only.
    EXPECT_TRUE(apply_R_star(basis({3})).is_zero());
}

TEST(tensor, f_element) {
    PauliTensor f = f_element();
    EXPECT_EQ(f.coefficient(MultiIndex{1, 1}), 1);
    EXPECT_EQ(f.coefficient(MultiIndex{3, 3}), -1);
    EXPECT_EQ(f.coefficient(MultiIndex{1, 2}), 0);
    EXPECT_EQ(tensor_multiply(f, f), PauliTensor::unit(2) * Rational(4));
}

TEST(tensor, multiply_and_embed) {
    EXPECT_EQ(tensor_multiply(basis({2, 1}), basis({3, 1})), basis({4, 1}));
    std::mt19937_64 rng(1);
    PauliTensor v = random_tensor(rng, 3);
    EXPECT_EQ(tensor_multiply(PauliTensor::unit(3), v), v);
    EXPECT_EQ(leg_embed(v, {1, 2, 3}, 3), v);
    PauliTensor f12 = leg_embed(f_element(), {1, 2}, 3);
    EXPECT_EQ(f12.coefficient(MultiIndex{2, 2, 1}), -1);
    EXPECT_EQ(f12.coefficient(MultiIndex{2, 2, 2}), 0);
    EXPECT_THROW(leg_embed(f_element(), {2, 2}, 3), std::invalid_argument);
    EXPECT_THROW(leg_embed(f_element(), {2, 4}, 3), std::out_of_range);
}

TEST(tensor, c_p_and_omega) {
    EXPECT_EQ(c_p_vector(SetPartition::one_block(2)).size(), 4u);
    EXPECT_EQ(c_p_vector(SetPartition::singletons(1)).size(), 4u);
    EXPECT_EQ(c_p_vector(NCPartition::parse("{1,3}{2}")).size(), 16u);
    EXPECT_EQ(omega(SetPartition::singletons(4)), PauliTensor::unit(4) * Rational(2));
    PauliTensor chain = PauliTensor::unit(4) * Rational(2);
    for (int j = 1; j < 4; ++j) chain = tensor_multiply(chain, leg_embed(f_element(), {j, j + 1}, 4));
    EXPECT_EQ(omega(SetPartition::one_block(4)), chain);
    PauliTensor f = f_element();
    PauliTensor w = tensor_multiply(tensor_multiply(leg_embed(f, {1, 2}, 6), leg_embed(f, {2, 4}, 6)),
                                    leg_embed(f, {5, 6}, 6)) * Rational(2);
    EXPECT_EQ(omega(NCPartition::parse("{1,2,4}{3}{5,6}")), w);
}

TEST(tensor, R_of_c_p) {
    for (size_t k = 1; k <= 6; ++k) {
        for (const auto &p : enumerate_nc(k)) {
            EXPECT_EQ(apply_R(c_p_vector(p)), omega(kreweras(p))) << p.to_string();
        }
        if (k >= 2) {
            PauliTensor chain = PauliTensor::unit(k) * Rational(2);
            for (int j = 1; j < static_cast<int>(k); ++j) {
                chain = tensor_multiply(chain, leg_embed(f_element(), {j, j + 1}, k));
            }
            EXPECT_EQ(apply_R(c_p_vector(SetPartition::singletons(k))), chain);
        }
    }
}

TEST(tensor, fixed_point_projection) {
    FixedPointProjection e1(1);
    EXPECT_EQ(e1.apply(basis({1})), basis({1}));
    EXPECT_TRUE(e1.apply(basis({2})).is_zero());
    for (size_t k = 1; k <= 5; ++k) {
        FixedPointProjection E(k);
        for (const auto &w : E.omegas()) {
            EXPECT_EQ(E.apply(w), w);
        }
        EXPECT_EQ(E.trace(), Rational(catalan(k)));
        EXPECT_EQ(rank(E.omega_gram()), catalan(k).get_ui());
    }
    for (size_t k = 1; k <= 3; ++k) {
        RationalMatrix d = FixedPointProjection(k).dense().matrix();
        EXPECT_EQ(d * d, d);
        EXPECT_TRUE(d.is_symmetric());
        EXPECT_EQ(rank(d), catalan(k).get_ui());
    }
}

TEST(tensor, R_star_E_R) {
    for (size_t k = 1; k <= 4; ++k) {
        FixedPointProjection E(k);
        RStarER model(E);
        auto nc = enumerate_nc(k);
        for (const auto &p : nc) {
            EXPECT_EQ(model.apply(c_p_vector(p)), c_p_vector(p));
        }
        if (k > 3) continue;
        // Compare with the projection onto span{c_p} built from the Gram matrix.
        RationalMatrix w = weingarten_matrix(k);
        const uint64_t dim = basis_size(k);
        RationalMatrix m(dim, dim), proj(dim, dim);
        for (uint64_t j = 0; j < dim; ++j) {
            PauliTensor col = c_span_projection(PauliTensor::basis(MultiIndex::from_code(j, k)), nc, w);
            for (const auto &[i, c] : col.coefficients()) proj(i, j) = c;
            for (uint64_t i = 0; i < dim; ++i) m(i, j) = model.entry(i, j);
        }
        EXPECT_EQ(m, proj);
        EXPECT_EQ(m * m, m);
        EXPECT_TRUE(m.is_symmetric());
    }
}

TEST(tensor, adjoint_rotation) {
    PolyMatrix4 rho = adjoint_rotation();
    EXPECT_EQ(rho(0, 0).reduce_unit_sphere(), Polynomial(1));
    for (size_t m = 1; m < 4; ++m) {
        EXPECT_TRUE(rho(m, 0).is_zero());
        EXPECT_TRUE(rho(0, m).is_zero());
    }
    EXPECT_EQ((rho.transpose() * rho).reduce_unit_sphere(), PolyMatrix4::identity());
    std::array<double, kNumVars> north{};
    north[0] = 1;
    auto at_north = rho.evaluate(north);
    for (size_t r = 0; r < 4; ++r)
        for (size_t s = 0; s < 4; ++s)
            EXPECT_EQ(at_north[4 * r + s], r == s ? 1.0 : 0.0);
}

TEST(tensor, E_via_integration) {
    for (size_t k = 1; k <= 3; ++k) {
        EXPECT_EQ(E_via_integration(k), FixedPointProjection(k).dense());
    }
    TensorOperator e2 = E_via_integration(2);
    EXPECT_EQ(e2(MultiIndex{3, 3}.code(), MultiIndex{2, 2}.code()), make_rational(1, 3));
}
