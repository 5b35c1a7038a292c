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

#include <stdexcept>
#include <thread>

#include "qperm/sphere.h"

namespace qperm {

namespace {

/// Bit offset of 0-based leg `leg` in a code with k legs.
inline unsigned shift_of(size_t leg, size_t k) {
    return static_cast<unsigned>(2 * (k - 1 - leg));
}

inline int digit(uint64_t code, size_t leg, size_t k) {
    return static_cast<int>((code >> shift_of(leg, k)) & 3) + 1;
}

void require_same_legs(const PauliTensor &u, const PauliTensor &v, const char *what) {
    if (u.legs() != v.legs()) {
        throw std::invalid_argument(std::string(what) + ": leg counts differ (" +
                                    std::to_string(u.legs()) + " vs " + std::to_string(v.legs()) +
                                    ")");
    }
}

const Rational kHalf = make_rational(1, 2);

}  // namespace

PauliTensor PauliTensor::basis(const MultiIndex &i, const Rational &coefficient) {
    PauliTensor t(i.size());
    t.add(i.code(), coefficient);
    return t;
}

PauliTensor PauliTensor::unit(size_t k) {
    PauliTensor t(k);
    t.add(0, 1);
    return t;
}

Rational PauliTensor::coefficient(const MultiIndex &i) const {
    if (i.size() != k_) {
        throw std::invalid_argument("multi-index length does not match tensor legs");
    }
    return coefficient(i.code());
}

Rational PauliTensor::coefficient(uint64_t code) const {
    auto it = coeffs_.find(code);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void PauliTensor::add(uint64_t code, const Rational &value) {
    if (value == 0) {
        return;
    }
    auto [it, inserted] = coeffs_.try_emplace(code, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) {
            coeffs_.erase(it);
        }
    }
}

PauliTensor &PauliTensor::operator+=(const PauliTensor &other) {
    require_same_legs(*this, other, "tensor sum");
    for (const auto &[code, c] : other.coeffs_) {
        add(code, c);
    }
    return *this;
}

PauliTensor &PauliTensor::operator-=(const PauliTensor &other) {
    require_same_legs(*this, other, "tensor difference");
    for (const auto &[code, c] : other.coeffs_) {
        add(code, -c);
    }
    return *this;
}

PauliTensor &PauliTensor::operator*=(const Rational &scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &[code, c] : coeffs_) {
        c *= scalar;
    }
    return *this;
}

std::string PauliTensor::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[code, c] : coeffs_) {
        if (!s.empty()) {
            s += " + ";
        }
        s += qperm::to_string(c) + "*c" + MultiIndex::from_code(code, k_).to_string();
    }
    return s;
}

Rational scalar_product(const PauliTensor &u, const PauliTensor &v) {
    require_same_legs(u, v, "scalar product");
    const auto &small = u.size() <= v.size() ? u : v;
    const auto &large = u.size() <= v.size() ? v : u;
    Rational total = 0;
    for (const auto &[code, c] : small.coefficients()) {
        auto it = large.coefficients().find(code);
        if (it != large.coefficients().end()) {
            total += c * it->second;
        }
    }
    return total;
}

RImage r_image(uint64_t code, size_t k) {
    RImage out;
    for (size_t l = 0; l < k; ++l) {
        PauliIndex here(digit(code, l, k));
        PauliIndex next(digit(code, (l + 1) % k, k));
        SignedPauli leg = pauli_product(SignedPauli{1, here}, pauli_star(next));
        out.sign *= leg.sign;
        out.code |= static_cast<uint64_t>(leg.index.slot()) << shift_of(l, k);
    }
    return out;
}

std::vector<RImage> r_preimages(uint64_t code, size_t k) {
    std::vector<RImage> out;
    for (int s = 1; s <= 4; ++s) {
        // c_{i_l} c_{i_{l+1}}^* ~ c_{m_l} forces i_{l+1} ~ c_{i_l} c_{m_l}.
        uint64_t candidate = static_cast<uint64_t>(s - 1) << shift_of(0, k);
        int current = s;
        for (size_t l = 0; l + 1 < k; ++l) {
            int next = pauli_product(PauliIndex(current), PauliIndex(digit(code, l, k))).index.value();
            candidate |= static_cast<uint64_t>(next - 1) << shift_of(l + 1, k);
            current = next;
        }
        RImage img = r_image(candidate, k);
        if (img.code == code) {
            out.push_back({img.sign, candidate});
        }
    }
    return out;
}

PauliTensor apply_R(const PauliTensor &v) {
    const size_t k = v.legs();
    if (k == 0) {
        throw std::invalid_argument("R needs at least one leg");
    }
    PauliTensor out(k);
    for (const auto &[code, c] : v.coefficients()) {
        RImage img = r_image(code, k);
        out.add(img.code, c * kHalf * img.sign);
    }
    return out;
}

PauliTensor apply_R_star(const PauliTensor &v) {
    const size_t k = v.legs();
    if (k == 0) {
        throw std::invalid_argument("R^* needs at least one leg");
    }
    PauliTensor out(k);
    for (const auto &[code, c] : v.coefficients()) {
        for (const auto &pre : r_preimages(code, k)) {
            out.add(pre.code, c * kHalf * pre.sign);
        }
    }
    return out;
}

PauliTensor f_element() {
    PauliTensor f(2);
    f.add(MultiIndex{1, 1}.code(), 1);
    for (int i = 2; i <= 4; ++i) {
        f.add(MultiIndex{i, i}.code(), -1);
    }
    return f;
}

PauliTensor tensor_multiply(const PauliTensor &u, const PauliTensor &v) {
    require_same_legs(u, v, "tensor product");
    const size_t k = u.legs();
    PauliTensor out(k);
    for (const auto &[cu, xu] : u.coefficients()) {
        for (const auto &[cv, xv] : v.coefficients()) {
            int sign = 1;
            uint64_t code = 0;
            for (size_t l = 0; l < k; ++l) {
                SignedPauli p = pauli_product(PauliIndex(digit(cu, l, k)), PauliIndex(digit(cv, l, k)));
                sign *= p.sign;
                code |= static_cast<uint64_t>(p.index.slot()) << shift_of(l, k);
            }
            Rational prod = xu * xv;
            out.add(code, sign > 0 ? prod : Rational(-prod));
        }
    }
    return out;
}

PauliTensor leg_embed(const PauliTensor &v, const std::vector<int> &positions, size_t k) {
    const size_t m = v.legs();
    if (positions.size() != m) {
        throw std::invalid_argument("leg_embed: need one position per leg");
    }
    for (size_t r = 0; r < m; ++r) {
        if (positions[r] < 1 || static_cast<size_t>(positions[r]) > k) {
            throw std::out_of_range("leg_embed: position " + std::to_string(positions[r]) +
                                    " outside 1.." + std::to_string(k));
        }
        if (r > 0 && positions[r] <= positions[r - 1]) {
            throw std::invalid_argument("leg_embed: positions must be strictly increasing");
        }
    }
    PauliTensor out(k);
    for (const auto &[code, c] : v.coefficients()) {
        uint64_t placed = 0;
        for (size_t r = 0; r < m; ++r) {
            uint64_t d = static_cast<uint64_t>(digit(code, r, m) - 1);
            placed |= d << shift_of(static_cast<size_t>(positions[r] - 1), k);
        }
        out.add(placed, c);
    }
    return out;
}

PauliTensor c_p_vector(const NCPartition &p) {
    const size_t k = p.size();
    const size_t b = p.block_count();
    PauliTensor out(k);
    for (uint64_t assign = 0; assign < basis_size(b); ++assign) {
        uint64_t code = 0;
        for (size_t x = 0; x < k; ++x) {
            uint64_t d = (assign >> (2 * p.labels()[x])) & 3;
            code |= d << shift_of(x, k);
        }
        out.add(code, 1);
    }
    return out;
}

PauliTensor omega(const NCPartition &p) {
    const size_t k = p.size();
    const PauliTensor f = f_element();
    PauliTensor out = PauliTensor::unit(k) * Rational(2);
    for (const auto &block : p.blocks()) {
        for (size_t r = 0; r + 1 < block.size(); ++r) {
            out = tensor_multiply(out, leg_embed(f, {block[r], block[r + 1]}, k));
        }
    }
    return out;
}

TensorOperator::TensorOperator(size_t k, RationalMatrix matrix) : k_(k), matrix_(std::move(matrix)) {
    if (matrix_.rows() != basis_size(k) || matrix_.cols() != basis_size(k)) {
        throw std::invalid_argument("operator matrix has the wrong shape for " + std::to_string(k) +
                                    " legs");
    }
}

PauliTensor TensorOperator::apply(const PauliTensor &v) const {
    if (v.legs() != k_) {
        throw std::invalid_argument("operator and tensor leg counts differ");
    }
    PauliTensor out(k_);
    for (uint64_t row = 0; row < matrix_.rows(); ++row) {
        Rational acc = 0;
        for (const auto &[code, c] : v.coefficients()) {
            acc += matrix_(row, code) * c;
        }
        out.add(row, acc);
    }
    return out;
}

FixedPointProjection::FixedPointProjection(size_t k) : k_(k), partitions_(enumerate_nc(k)) {
    const size_t n = partitions_.size();
    omegas_.reserve(n);
    for (const auto &p : partitions_) {
        omegas_.push_back(omega(p));
    }
    gram_ = RationalMatrix(n, n);
    for (size_t p = 0; p < n; ++p) {
        for (size_t q = p; q < n; ++q) {
            gram_(p, q) = gram_(q, p) = scalar_product(omegas_[p], omegas_[q]);
        }
    }
    gram_inv_ = inverse(gram_);
    weighted_.resize(n);
    for (size_t p = 0; p < n; ++p) {
        PauliTensor w(k);
        for (size_t q = 0; q < n; ++q) {
            if (gram_inv_(p, q) != 0) {
                w += omegas_[q] * gram_inv_(p, q);
            }
        }
        weighted_[p] = w.coefficients();
    }
}

PauliTensor FixedPointProjection::apply(const PauliTensor &v) const {
    if (v.legs() != k_) {
        throw std::invalid_argument("projection and tensor leg counts differ");
    }
    PauliTensor out(k_);
    for (size_t p = 0; p < partitions_.size(); ++p) {
        Rational weight = 0;
        for (const auto &[code, c] : v.coefficients()) {
            auto it = weighted_[p].find(code);
            if (it != weighted_[p].end()) {
                weight += it->second * c;
            }
        }
        if (weight != 0) {
            out += omegas_[p] * weight;
        }
    }
    return out;
}

Rational FixedPointProjection::entry(uint64_t m, uint64_t n) const {
    Rational total = 0;
    for (size_t p = 0; p < partitions_.size(); ++p) {
        auto a = omegas_[p].coefficients().find(m);
        if (a == omegas_[p].coefficients().end()) {
            continue;
        }
        auto b = weighted_[p].find(n);
        if (b != weighted_[p].end()) {
            total += a->second * b->second;
        }
    }
    return total;
}

Rational FixedPointProjection::trace() const {
    Rational total = 0;
    for (size_t p = 0; p < partitions_.size(); ++p) {
        for (const auto &[code, c] : omegas_[p].coefficients()) {
            auto b = weighted_[p].find(code);
            if (b != weighted_[p].end()) {
                total += c * b->second;
            }
        }
    }
    return total;
}

TensorOperator FixedPointProjection::dense() const {
    TensorOperator op(k_);
    for (uint64_t n = 0; n < basis_size(k_); ++n) {
        PauliTensor basis_vec(k_);
        basis_vec.add(n, 1);
        PauliTensor col = apply(basis_vec);
        for (const auto &[m, c] : col.coefficients()) {
            op(m, n) = c;
        }
    }
    return op;
}

PolyMatrix4 adjoint_rotation() {
    // x = a c1 + b c2 + c c3 + d c4 and x^* = a c1 - b c2 - c c3 - d c4.
    std::array<Polynomial, 4> x, xs;
    for (int s = 0; s < 4; ++s) {
        x[s] = Polynomial::variable(static_cast<Var>(s));
        xs[s] = s == 0 ? x[s] : -x[s];
    }
    PolyMatrix4 rho;
    for (int j = 1; j <= 4; ++j) {
        for (int s = 1; s <= 4; ++s) {
            for (int t = 1; t <= 4; ++t) {
                SignedPauli left = pauli_product(PauliIndex(s), PauliIndex(j));
                SignedPauli full = pauli_product(left, SignedPauli{1, PauliIndex(t)});
                Polynomial term = x[s - 1] * xs[t - 1];
                if (full.sign < 0) {
                    term = -term;
                }
                rho(full.index.slot(), static_cast<size_t>(j - 1)) += term;
            }
        }
    }
    return rho;
}

TensorOperator E_via_integration(size_t k, unsigned threads) {
    const PolyMatrix4 rho = adjoint_rotation();
    const uint64_t dim = basis_size(k);
    TensorOperator op(k);
    auto column = [&](uint64_t n) {
        for (uint64_t m = 0; m < dim; ++m) {
            Polynomial prod(1);
            for (size_t l = 0; l < k && !prod.is_zero(); ++l) {
                const Polynomial &f = rho(digit(m, l, k) - 1, digit(n, l, k) - 1);
                prod = f.is_zero() ? Polynomial() : prod * f;
            }
            if (!prod.is_zero()) {
                op(m, n) = integrate_constant(prod);
            }
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        for (uint64_t n = 0; n < dim; ++n) {
            column(n);
        }
        return op;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (uint64_t n = w; n < dim; n += threads) {
                column(n);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    return op;
}

const PauliTensor &RStarER::E_column(uint64_t m) const {
    auto it = cache_.find(m);
    if (it != cache_.end()) {
        return it->second;
    }
    PauliTensor basis_vec(E_.legs());
    basis_vec.add(m, 1);
    return cache_.emplace(m, E_.apply(basis_vec)).first->second;
}

PauliTensor RStarER::apply(const PauliTensor &v) const {
    const size_t k = E_.legs();
    if (v.legs() != k) {
        throw std::invalid_argument("R^*ER and tensor leg counts differ");
    }
    PauliTensor rv = apply_R(v);
    PauliTensor erv(k);
    for (const auto &[m, c] : rv.coefficients()) {
        erv += E_column(m) * c;
    }
    return apply_R_star(erv);
}

Rational RStarER::entry(uint64_t i, uint64_t j) const {
    const size_t k = E_.legs();
    RImage ri = r_image(i, k);
    RImage rj = r_image(j, k);
    Rational e = E_column(rj.code).coefficient(ri.code);
    e /= 4;
    return ri.sign * rj.sign > 0 ? e : Rational(-e);
}

PauliTensor c_span_projection(const PauliTensor &v, const std::vector<NCPartition> &nc,
                              const RationalMatrix &gram_inverse) {
    const size_t k = v.legs();
    std::vector<Rational> pairing(nc.size());
    for (size_t q = 0; q < nc.size(); ++q) {
        for (const auto &[code, c] : v.coefficients()) {
            if (delta(nc[q], MultiIndex::from_code(code, k))) {
                pairing[q] += c;
            }
        }
    }
    PauliTensor out(k);
    for (size_t p = 0; p < nc.size(); ++p) {
        Rational w = 0;
        for (size_t q = 0; q < nc.size(); ++q) {
            w += gram_inverse(p, q) * pairing[q];
        }
        if (w != 0) {
            out += c_p_vector(nc[p]) * w;
        }
    }
    return out;
}

}  // namespace qperm
