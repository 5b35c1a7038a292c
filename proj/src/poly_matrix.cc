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

#include "qperm/poly_matrix.h"

namespace qperm {

PolyMatrix4 PolyMatrix4::identity() {
    PolyMatrix4 m;
    for (size_t i = 0; i < 4; ++i) {
        m(i, i) = Polynomial(1);
    }
    return m;
}

PolyMatrix4 &PolyMatrix4::operator+=(const PolyMatrix4 &other) {
    for (size_t i = 0; i < 16; ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

PolyMatrix4 &PolyMatrix4::operator-=(const PolyMatrix4 &other) {
    for (size_t i = 0; i < 16; ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

PolyMatrix4 &PolyMatrix4::operator*=(const Rational &scalar) {
    for (auto &e : entries_) {
        e *= scalar;
    }
    return *this;
}

PolyMatrix4 operator*(const PolyMatrix4 &x, const PolyMatrix4 &y) {
    PolyMatrix4 r;
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            Polynomial acc;
            for (size_t l = 0; l < 4; ++l) {
                if (x(i, l).is_zero() || y(l, j).is_zero()) {
                    continue;
                }
                acc += x(i, l) * y(l, j);
            }
            r(i, j) = std::move(acc);
        }
    }
    return r;
}

PolyMatrix4 PolyMatrix4::scaled(const Polynomial &factor) const {
    PolyMatrix4 r;
    for (size_t i = 0; i < 16; ++i) {
        r.entries_[i] = entries_[i] * factor;
    }
    return r;
}

Polynomial PolyMatrix4::trace() const {
    Polynomial t;
    for (size_t i = 0; i < 4; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

PolyMatrix4 PolyMatrix4::transpose() const {
    PolyMatrix4 r;
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

PolyMatrix4 PolyMatrix4::pow(unsigned e) const {
    PolyMatrix4 result = identity();
    for (unsigned i = 0; i < e; ++i) {
        result = result * *this;
    }
    return result;
}

PolyMatrix4 PolyMatrix4::reduce_unit_sphere() const {
    PolyMatrix4 r;
    for (size_t i = 0; i < 16; ++i) {
        r.entries_[i] = entries_[i].reduce_unit_sphere();
    }
    return r;
}

PolyMatrix4 PolyMatrix4::substitute_t(const Rational &value) const {
    PolyMatrix4 r;
    for (size_t i = 0; i < 16; ++i) {
        r.entries_[i] = entries_[i].substitute_t(value);
    }
    return r;
}

std::array<double, 16> PolyMatrix4::evaluate(const std::array<double, kNumVars> &point) const {
    std::array<double, 16> r{};
    for (size_t i = 0; i < 16; ++i) {
        r[i] = entries_[i].evaluate(point);
    }
    return r;
}

std::string PolyMatrix4::to_string() const {
    std::string out;
    for (size_t i = 0; i < 4; ++i) {
        out += "[";
        for (size_t j = 0; j < 4; ++j) {
            out += (j ? ", " : "") + (*this)(i, j).to_string();
        }
        out += "]\n";
    }
    return out;
}

}  // namespace qperm
