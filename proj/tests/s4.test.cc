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

#include "qperm/s4.h"

#include <random>

#include "gtest/gtest.h"

using namespace qperm;

namespace {

std::array<Rational, 4> quarter() {
    Rational q = make_rational(1, 4);
    return {q, q, q, q};
}

AtomicLaw law_of(std::initializer_list<std::pair<Rational, long>> atoms) {
    std::vector<AtomicAtom> out;
    for (const auto &[x, w] : atoms) out.push_back({x, make_rational(w, 24)});
    return AtomicLaw(out);
}

}  // namespace

TEST(s4, permutations) {
    auto all = all_permutations4();
    EXPECT_EQ(all.size(), 24u);
    EXPECT_EQ(all[0], Permutation4{});
    EXPECT_EQ(all[0].fixed_point_count(), 4u);
    EXPECT_EQ(fixed_point_distribution(), (std::array<unsigned, 5>{9, 8, 6, 0, 1}));
    EXPECT_THROW(Permutation4::from_images({1, 1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(Permutation4::from_images({0, 1, 2, 3}), std::invalid_argument);
    Permutation4 p = Permutation4::from_images({2, 1, 3, 4});
    EXPECT_FALSE(p.fixes(1));
    EXPECT_TRUE(p.fixes(4));
    EXPECT_EQ(p.fixed_point_count(), 2u);
}

TEST(s4, atomic_law) {
    AtomicLaw law({{1, make_rational(1, 2)}, {0, make_rational(1, 4)}, {1, make_rational(1, 4)},
                   {make_rational(1, 2), 0}});
    ASSERT_EQ(law.atoms().size(), 2u);
    EXPECT_EQ(law.atoms()[0].location, 0);
    EXPECT_EQ(law.atoms()[1].weight, make_rational(3, 4));
    EXPECT_EQ(law.total_weight(), 1);
    EXPECT_EQ(law.moment(3), make_rational(3, 4));
    EXPECT_EQ(law.to_string(), "1/4*delta(0/1) + 3/4*delta(1/1)");
}

TEST(s4, uniform_laws) {
    Rational q = make_rational(1, 4);
    auto t = quarter();
    EXPECT_EQ(classical_law(t), law_of({{0, 9}, {q, 8}, {make_rational(1, 2), 6}, {1, 1}}));
    std::array<Rational, 4> m1{1, 0, 0, 0};
    EXPECT_EQ(classical_law(m1), law_of({{0, 18}, {1, 6}}));
    std::array<Rational, 4> m2{make_rational(1, 2), make_rational(1, 2), 0, 0};
    EXPECT_EQ(classical_law(m2), law_of({{0, 14}, {make_rational(1, 2), 8}, {1, 2}}));
    Rational third = make_rational(1, 3);
    std::array<Rational, 4> m3{third, third, third, 0};
    EXPECT_EQ(classical_law(m3),
              law_of({{0, 11}, {third, 9}, {make_rational(2, 3), 3}, {1, 1}}));
}

TEST(s4, enumerated_matches_closed) {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<long> num(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<Rational, 4> t;
        Rational rest = 1;
        for (int i = 0; i < 3; ++i) {
            t[i] = make_rational(num(rng), 13);
            rest -= t[i];
        }
        t[3] = rest;
        AtomicLaw a = classical_law_enumerated(t), b = classical_law_closed(t);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.total_weight(), 1);
        EXPECT_EQ(classical_moment(a, 1), make_rational(1, 4));
    }
    EXPECT_THROW(require_unit_sum({1, 1, 0, 0}), std::invalid_argument);
    EXPECT_THROW(classical_law({0, 0, 0, 0}), std::invalid_argument);
}

TEST(s4, symbolic) {
    auto atoms = classical_law_symbolic();
    EXPECT_EQ(atoms.size(), 12u);
    Rational total = 0;
    for (const auto &a : atoms) total += a.weight;
    EXPECT_EQ(total, 1);
}
