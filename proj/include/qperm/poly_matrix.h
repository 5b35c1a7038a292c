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

#ifndef QPERM_POLY_MATRIX_H
#define QPERM_POLY_MATRIX_H

#include <array>
#include <string>

#include "qperm/polynomial.h"

namespace qperm {

/// 4x4 matrix with polynomial entries, row-major, 0-based indexing.
class PolyMatrix4 {
   public:
    PolyMatrix4() = default;

    static PolyMatrix4 identity();

    Polynomial &operator()(size_t row, size_t col) {
        return entries_[4 * row + col];
    }
    const Polynomial &operator()(size_t row, size_t col) const {
        return entries_[4 * row + col];
    }

    PolyMatrix4 &operator+=(const PolyMatrix4 &other);
    PolyMatrix4 &operator-=(const PolyMatrix4 &other);
    PolyMatrix4 &operator*=(const Rational &scalar);
    friend PolyMatrix4 operator+(PolyMatrix4 x, const PolyMatrix4 &y) {
        return x += y;
    }
    friend PolyMatrix4 operator-(PolyMatrix4 x, const PolyMatrix4 &y) {
        return x -= y;
    }
    friend PolyMatrix4 operator*(PolyMatrix4 x, const Rational &s) {
        return x *= s;
    }
    friend PolyMatrix4 operator*(const PolyMatrix4 &x, const PolyMatrix4 &y);
    /// Every entry multiplied by the same polynomial.
    PolyMatrix4 scaled(const Polynomial &factor) const;

    Polynomial trace() const;
    PolyMatrix4 transpose() const;
    PolyMatrix4 pow(unsigned e) const;
    PolyMatrix4 reduce_unit_sphere() const;
    PolyMatrix4 substitute_t(const Rational &value) const;
    std::array<double, 16> evaluate(const std::array<double, kNumVars> &point) const;

    bool operator==(const PolyMatrix4 &other) const = default;
    std::string to_string() const;

   private:
    std::array<Polynomial, 16> entries_{};
};

}  // namespace qperm

#endif
