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

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qperm {

Permutation4 Permutation4::from_images(std::array<int, 4> images) {
    std::array<int, 4> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{1, 2, 3, 4}) {
        throw std::invalid_argument("images do not form a permutation of {1,2,3,4}");
    }
    Permutation4 p;
    p.images = images;
    return p;
}

unsigned Permutation4::fixed_point_count() const {
    unsigned n = 0;
    for (int i = 1; i <= 4; ++i) {
        n += fixes(i);
    }
    return n;
}

std::vector<Permutation4> all_permutations4() {
    std::vector<Permutation4> out;
    std::array<int, 4> images{1, 2, 3, 4};
    do {
        out.push_back(Permutation4::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::array<unsigned, 5> fixed_point_distribution() {
    std::array<unsigned, 5> counts{};
    for (const auto &p : all_permutations4()) {
        ++counts[p.fixed_point_count()];
    }
    return counts;
}

AtomicLaw::AtomicLaw(std::vector<AtomicAtom> atoms) {
    std::map<Rational, Rational> merged;
    for (auto &a : atoms) {
        merged[a.location] += a.weight;
    }
    for (auto &[x, w] : merged) {
        if (w != 0) {
            atoms_.push_back({x, w});
        }
    }
}

Rational AtomicLaw::total_weight() const {
    Rational total = 0;
    for (const auto &a : atoms_) {
        total += a.weight;
    }
    return total;
}

Rational AtomicLaw::moment(unsigned k) const {
    Rational total = 0;
    for (const auto &a : atoms_) {
        total += a.weight * pow(a.location, k);
    }
    return total;
}

std::string AtomicLaw::to_string() const {
    std::string out;
    for (const auto &a : atoms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += qperm::to_string(a.weight) + "*delta(" + qperm::to_string(a.location) + ")";
    }
    return out.empty() ? "0" : out;
}

void require_unit_sum(const std::array<Rational, 4> &t) {
    Rational sum = t[0] + t[1] + t[2] + t[3];
    if (sum != 1) {
        throw std::invalid_argument("weights must sum to 1, got " + to_string(sum));
    }
}

AtomicLaw classical_law_enumerated(const std::array<Rational, 4> &t) {
    require_unit_sum(t);
    const Rational w = make_rational(1, 24);
    std::vector<AtomicAtom> atoms;
    for (const auto &p : all_permutations4()) {
        Rational x = 0;
        for (int i = 1; i <= 4; ++i) {
            if (p.fixes(i)) {
                x += t[i - 1];
            }
        }
        atoms.push_back({x, w});
    }
    return AtomicLaw(std::move(atoms));
}

AtomicLaw classical_law_closed(const std::array<Rational, 4> &t) {
    require_unit_sum(t);
    std::vector<AtomicAtom> atoms{{0, make_rational(9, 24)}, {1, make_rational(1, 24)}};
    for (size_t i = 0; i < 4; ++i) {
        atoms.push_back({t[i], make_rational(2, 24)});
        for (size_t j = i + 1; j < 4; ++j) {
            atoms.push_back({t[i] + t[j], make_rational(1, 24)});
        }
    }
    return AtomicLaw(std::move(atoms));
}

AtomicLaw classical_law(const std::array<Rational, 4> &t) {
    AtomicLaw enumerated = classical_law_enumerated(t);
    if (!(enumerated == classical_law_closed(t))) {
        throw std::logic_error("enumerated S4 law differs from the closed form");
    }
    return enumerated;
}

std::vector<SymbolicAtom> classical_law_symbolic() {
    const std::array<Polynomial, 4> t = {
        Polynomial::variable(Var::A), Polynomial::variable(Var::B),
        Polynomial::variable(Var::C), Polynomial::variable(Var::D)};
    std::vector<SymbolicAtom> out{{Polynomial(0), make_rational(9, 24)},
                                  {Polynomial(1), make_rational(1, 24)}};
    for (size_t i = 0; i < 4; ++i) {
        out.push_back({t[i], make_rational(2, 24)});
    }
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = i + 1; j < 4; ++j) {
            out.push_back({t[i] + t[j], make_rational(1, 24)});
        }
    }
    return out;
}

Rational classical_moment(const AtomicLaw &law, unsigned k) {
    return law.moment(k);
}

}  // namespace qperm
