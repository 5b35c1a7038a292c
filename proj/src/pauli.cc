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

#include "qperm/pauli.h"

namespace qperm {

namespace {

struct ProductEntry {
    int8_t sign;
    uint8_t index;
};

/// kProduct[i][j] describes c_{i+1} c_{j+1}.
constexpr std::array<std::array<ProductEntry, 4>, 4> build_product_table() {
    std::array<std::array<ProductEntry, 4>, 4> t{};
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            ProductEntry e{1, 1};
            if (i == 1) {
                e = {1, static_cast<uint8_t>(j)};
            } else if (j == 1) {
                e = {1, static_cast<uint8_t>(i)};
            } else if (i == j) {
                e = {-1, 1};
            } else {
                // Cyclic order 2 -> 3 -> 4 -> 2 gives +; the remaining index
                // is the third imaginary unit.
                int third = 9 - i - j;
                bool cyclic = (i == 2 && j == 3) || (i == 3 && j == 4) || (i == 4 && j == 2);
                e = {static_cast<int8_t>(cyclic ? 1 : -1), static_cast<uint8_t>(third)};
            }
            t[i - 1][j - 1] = e;
        }
    }
    return t;
}

constexpr auto kProduct = build_product_table();

}  // namespace

SignedPauli pauli_product(PauliIndex i, PauliIndex j) {
    const auto &e = kProduct[i.slot()][j.slot()];
    return {e.sign, PauliIndex(e.index)};
}

SignedPauli pauli_product(SignedPauli x, SignedPauli y) {
    SignedPauli r = pauli_product(x.index, y.index);
    r.sign *= x.sign * y.sign;
    return r;
}

SignedPauli pauli_star(PauliIndex i) {
    return {i.value() == 1 ? 1 : -1, i};
}

MultiIndex::MultiIndex(std::vector<uint8_t> values) : values_(std::move(values)) {
    for (auto v : values_) {
        if (v < 1 || v > 4) {
            throw std::out_of_range("multi-index entries must be in 1..4");
        }
    }
}

MultiIndex::MultiIndex(std::initializer_list<int> values) {
    values_.reserve(values.size());
    for (int v : values) {
        if (v < 1 || v > 4) {
            throw std::out_of_range("multi-index entries must be in 1..4");
        }
        values_.push_back(static_cast<uint8_t>(v));
    }
}

MultiIndex MultiIndex::from_code(uint64_t code, size_t k) {
    std::vector<uint8_t> v(k);
    for (size_t leg = k; leg-- > 0;) {
        v[leg] = static_cast<uint8_t>((code & 3) + 1);
        code >>= 2;
    }
    MultiIndex m;
    m.values_ = std::move(v);
    return m;
}

uint64_t MultiIndex::code() const {
    uint64_t c = 0;
    for (auto v : values_) {
        c = (c << 2) | static_cast<uint64_t>(v - 1);
    }
    return c;
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < values_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(values_[i]);
    }
    return s + ")";
}

uint64_t basis_size(size_t k) {
    if (k > 31) {
        throw std::out_of_range("tensor leg count too large for 64-bit basis codes");
    }
    return uint64_t{1} << (2 * k);
}

bool SignedCoordinateVector::is_signed_permutation() const {
    std::array<bool, 4> used{};
    for (size_t m = 0; m < 4; ++m) {
        if ((sign[m] != 1 && sign[m] != -1) || source[m] < 0 || source[m] > 3 || used[source[m]]) {
            return false;
        }
        used[source[m]] = true;
    }
    return true;
}

std::array<Polynomial, 4> SignedCoordinateVector::as_polynomials() const {
    std::array<Polynomial, 4> out;
    for (size_t m = 0; m < 4; ++m) {
        out[m] = Polynomial::variable(static_cast<Var>(source[m])) * Rational(sign[m]);
    }
    return out;
}

SignedCoordinateVector expand_cxc(PauliIndex i, PauliIndex j) {
    // c_i x c_j = sum_s x_s c_i c_s c_j, and each c_i c_s c_j is a signed
    // basis element, distinct for distinct s.
    SignedCoordinateVector v;
    for (int s = 1; s <= 4; ++s) {
        SignedPauli left = pauli_product(i, PauliIndex(s));
        SignedPauli full = pauli_product(left, SignedPauli{1, j});
        v.sign[full.index.slot()] = full.sign;
        v.source[full.index.slot()] = s - 1;
    }
    return v;
}

PolyMatrix4 projection_matrix(PauliIndex i, PauliIndex j) {
    auto v = expand_cxc(i, j).as_polynomials();
    PolyMatrix4 p;
    for (size_t l = 0; l < 4; ++l) {
        for (size_t m = 0; m < 4; ++m) {
            p(l, m) = v[l] * v[m];
        }
    }
    return p;
}

}  // namespace qperm
