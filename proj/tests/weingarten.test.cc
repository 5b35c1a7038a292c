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

#include "qperm/weingarten.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"

using namespace qperm;

namespace {

MultiIndex relabel(const MultiIndex &i, const std::array<uint8_t, 4> &sigma) {
    std::vector<uint8_t> out;
    for (size_t l = 0; l < i.size(); ++l) out.push_back(sigma[i.at(l).value() - 1]);
    return MultiIndex(out);
}

}  // namespace

TEST(weingarten, gram_examples) {
    GramMatrix g1 = gram(1);
    ASSERT_EQ(g1.entries.rows(), 1u);
    EXPECT_EQ(g1.entries(0, 0), 4);
    GramMatrix g2 = gram(2);
    // Rows: {1}{2}, then {1,2}.
    EXPECT_EQ(g2.partitions[0], SetPartition::singletons(2));
    EXPECT_EQ(g2.entries(0, 0), 16);
    EXPECT_EQ(g2.entries(0, 1), 4);
    EXPECT_EQ(g2.entries(1, 1), 4);
    GramMatrix g3 = gram(3);
    EXPECT_EQ(g3.entries.rows(), 5u);
    for (size_t p = 0; p < 5; ++p) {
        EXPECT_EQ(g3.entries(p, p), Rational(1u << (2 * g3.partitions[p].block_count())));
    }
    for (size_t k = 1; k <= 5; ++k) {
        EXPECT_EQ(gram(k).entries, gram_by_counting(k)) << "k=" << k;
    }
}

TEST(weingarten, inverse_and_sign) {
    RationalMatrix w2 = weingarten_matrix(2);
    EXPECT_EQ(w2(0, 0), make_rational(1, 12));
    EXPECT_EQ(w2(0, 1), make_rational(-1, 12));
    EXPECT_EQ(w2(1, 1), make_rational(1, 3));
    for (size_t k = 1; k <= 5; ++k) {
        GramMatrix g = gram(k);
        RationalMatrix w = weingarten_matrix(k);
        EXPECT_EQ(g.entries * w, RationalMatrix::identity(g.entries.rows()));
        EXPECT_TRUE(w.is_symmetric());
    }
}

TEST(weingarten, haar_moments) {
    EXPECT_EQ(haar_moment_u(MultiIndex{1}, MultiIndex{3}), make_rational(1, 4));
    EXPECT_EQ(haar_moment_u(MultiIndex{1, 1}, MultiIndex{1, 2}), 0);
    EXPECT_EQ(haar_moment_u(MultiIndex{1, 1}, MultiIndex{1, 1}), make_rational(1, 4));
    EXPECT_EQ(haar_moment_u(MultiIndex{1, 2}, MultiIndex{1, 2}), make_rational(1, 12));
    EXPECT_THROW(haar_moment_u(MultiIndex{1}, MultiIndex{1, 2}), std::invalid_argument);
}

TEST(weingarten, rows_of_a_magic_unitary_sum_to_one) {
    // sum_j u_{i1 j} u_{i2 j2} ... = u_{i2 j2} ...
    for (size_t k = 2; k <= 4; ++k) {
        WeingartenCalculator w(k);
        WeingartenCalculator lower(k - 1);
        std::mt19937_64 rng(k);
        std::uniform_int_distribution<uint64_t> pick(0, basis_size(k - 1) - 1);
        std::uniform_int_distribution<int> leg(1, 4);
        for (int trial = 0; trial < 30; ++trial) {
            MultiIndex i = MultiIndex::from_code(pick(rng), k - 1);
            MultiIndex j = MultiIndex::from_code(pick(rng), k - 1);
            int head = leg(rng);
            Rational total = 0;
            for (int s = 1; s <= 4; ++s) {
                std::vector<uint8_t> iv{uint8_t(head)}, jv{uint8_t(s)};
                for (size_t l = 0; l < k - 1; ++l) {
                    iv.push_back(i.at(l).value());
                    jv.push_back(j.at(l).value());
                }
                total += w.moment(MultiIndex(iv), MultiIndex(jv));
            }
            EXPECT_EQ(total, lower.moment(i, j));
        }
    }
    RationalMatrix w3 = weingarten_matrix(3);
    GramMatrix g3 = gram(3);
    // W times the first Gram column is the first unit vector.
    for (size_t p = 0; p < 5; ++p) {
        Rational total = 0;
        for (size_t q = 0; q < 5; ++q) total += w3(p, q) * g3.entries(q, 0);
        EXPECT_EQ(total, p == 0 ? Rational(1) : Rational(0));
    }
}

TEST(weingarten, relabeling_symmetry) {
    std::array<uint8_t, 4> sigma{3, 1, 4, 2};
    WeingartenCalculator w(3);
    for (uint64_t a = 0; a < 64; a += 3) {
        for (uint64_t b = 0; b < 64; b += 5) {
            MultiIndex i = MultiIndex::from_code(a, 3), j = MultiIndex::from_code(b, 3);
            EXPECT_EQ(w.moment(i, j), w.moment(relabel(i, sigma), j));
            EXPECT_EQ(w.moment(i, j), w.moment(i, relabel(j, sigma)));
            EXPECT_EQ(w.moment(i, j), w.moment(j, i));
        }
    }
}

TEST(weingarten, model_pipelines_agree) {
    std::mt19937_64 rng(5);
    for (size_t k = 1; k <= 3; ++k) {
        FixedPointProjection E(k);
        WeingartenCalculator w(k);
        std::uniform_int_distribution<uint64_t> pick(0, basis_size(k) - 1);
        for (int trial = 0; trial < 25; ++trial) {
            MultiIndex i = MultiIndex::from_code(pick(rng), k), j = MultiIndex::from_code(pick(rng), k);
            Rational p = model_moment(i, j, Pipeline::Polynomial);
            EXPECT_EQ(p, model_moment(i, j, Pipeline::Operator));
            EXPECT_EQ(p, model_moment_operator(i, j, E));
            EXPECT_EQ(p, w.moment(i, j));
        }
    }
}

TEST(weingarten, faithfulness) {
    for (size_t k = 1; k <= 4; ++k) {
        MomentMatrixReport r = verify_faithfulness(k);
        EXPECT_TRUE(r.passed) << r.first_mismatch;
        EXPECT_EQ(r.compared, basis_size(k) * basis_size(k));
        EXPECT_EQ(r.max_discrepancy, 0);
        EXPECT_GT(r.cross_checked, 0u);
    }
}
