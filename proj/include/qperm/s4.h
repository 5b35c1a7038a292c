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

#ifndef QPERM_S4_H
#define QPERM_S4_H

#include <array>
#include <string>
#include <vector>

#include "qperm/polynomial.h"
#include "qperm/rational.h"

namespace qperm {

/// A permutation of {1, 2, 3, 4}; images[i-1] is the image of i.
struct Permutation4 {
    std::array<int, 4> images{1, 2, 3, 4};

    /// Throws std::invalid_argument unless `images` is a bijection of {1..4}.
    static Permutation4 from_images(std::array<int, 4> images);
    bool fixes(int i) const {
        return images[i - 1] == i;
    }
    unsigned fixed_point_count() const;
    bool operator==(const Permutation4 &) const = default;
};

/// All 24 permutations in lexicographic order of their images.
std::vector<Permutation4> all_permutations4();

/// Number of permutations with 0, 1, 2, 3, 4 fixed points: 9, 8, 6, 0, 1.
std::array<unsigned, 5> fixed_point_distribution();

struct AtomicAtom {
    Rational location;
    Rational weight;
    bool operator==(const AtomicAtom &) const = default;
};

/// A finitely supported law; atoms sorted by location with distinct
/// locations and positive weights.
class AtomicLaw {
   public:
    AtomicLaw() = default;
    /// Merges atoms at equal locations, drops zero weights and sorts.
    explicit AtomicLaw(std::vector<AtomicAtom> atoms);

    const std::vector<AtomicAtom> &atoms() const {
        return atoms_;
    }
    Rational total_weight() const;
    Rational moment(unsigned k) const;
    /// "w1*delta(x1) + w2*delta(x2) + ..." with exact rationals.
    std::string to_string() const;
    bool operator==(const AtomicLaw &) const = default;

   private:
    std::vector<AtomicAtom> atoms_;
};

/// Throws std::invalid_argument unless t has entries summing to 1.
void require_unit_sum(const std::array<Rational, 4> &t);

/// Law of sum_i t_i u_ii under the Haar measure of S4, by listing the 24
/// permutations.
AtomicLaw classical_law_enumerated(const std::array<Rational, 4> &t);
/// (9 d_0 + d_1 + 2 sum_i d_{t_i} + sum_{i<j} d_{t_i+t_j}) / 24.
AtomicLaw classical_law_closed(const std::array<Rational, 4> &t);
/// The enumerated law, after checking it against the closed form.
AtomicLaw classical_law(const std::array<Rational, 4> &t);

/// Closed form with generic weights: locations are linear forms in
/// t_1..t_4, written with the variables a, b, c, d. Not merged.
struct SymbolicAtom {
    Polynomial location;
    Rational weight;
};
std::vector<SymbolicAtom> classical_law_symbolic();

Rational classical_moment(const AtomicLaw &law, unsigned k);

}  // namespace qperm

#endif
