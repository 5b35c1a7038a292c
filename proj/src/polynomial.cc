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

#include "qperm/polynomial.h"

#include <atomic>
#include <cmath>

namespace qperm {

namespace {

std::atomic<unsigned> g_degree_cap{64};

constexpr const char *kVarNames[kNumVars] = {"a", "b", "c", "d", "t"};

}  // namespace

unsigned degree_cap() {
    return g_degree_cap.load(std::memory_order_relaxed);
}

void set_degree_cap(unsigned cap) {
    if (cap == 0 || cap > 255) {
        throw std::invalid_argument("degree cap must be in [1, 255]");
    }
    g_degree_cap.store(cap, std::memory_order_relaxed);
}

Monomial Monomial::of(unsigned ea, unsigned eb, unsigned ec, unsigned ed, unsigned et) {
    if (ea + eb + ec + ed + et > degree_cap()) {
        throw ArithmeticError("monomial exceeds the degree cap");
    }
    Monomial m;
    m.exps = {static_cast<uint8_t>(ea), static_cast<uint8_t>(eb), static_cast<uint8_t>(ec),
              static_cast<uint8_t>(ed), static_cast<uint8_t>(et)};
    return m;
}

unsigned Monomial::sphere_degree() const {
    return unsigned{exps[0]} + exps[1] + exps[2] + exps[3];
}

unsigned Monomial::total_degree() const {
    return sphere_degree() + exps[4];
}

Monomial Monomial::operator*(const Monomial &other) const {
    if (total_degree() + other.total_degree() > degree_cap()) {
        throw ArithmeticError("polynomial product exceeds the degree cap of " +
                              std::to_string(degree_cap()));
    }
    Monomial r;
    for (size_t i = 0; i < kNumVars; ++i) {
        r.exps[i] = static_cast<uint8_t>(exps[i] + other.exps[i]);
    }
    return r;
}

Polynomial::Polynomial(const Rational &constant) {
    add_term(Monomial{}, constant);
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {
}

Polynomial Polynomial::variable(Var v) {
    Monomial m;
    m.exps[static_cast<size_t>(v)] = 1;
    return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial &m, const Rational &coefficient) {
    Polynomial p;
    p.add_term(m, coefficient);
    return p;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::term_list() const {
    return {terms_.begin(), terms_.end()};
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial{});
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) {
        throw ArithmeticError("polynomial is not constant: " + to_string());
    }
    return constant_term();
}

Rational Polynomial::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m[v]);
    }
    return d;
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
    for (const auto &[m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
    for (const auto &[m, c] : other.terms_) {
        add_term(m, Rational(-c));
    }
    return *this;
}

Polynomial operator*(const Polynomial &x, const Polynomial &y) {
    Polynomial r;
    for (const auto &[mx, cx] : x.terms_) {
        for (const auto &[my, cy] : y.terms_) {
            r.add_term(mx * my, Rational(cx * cy));
        }
    }
    return r;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) {
    *this = *this * other;
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial Polynomial::substitute_t(const Rational &value) const {
    Polynomial r;
    for (const auto &[m, c] : terms_) {
        Monomial base = m;
        unsigned et = base.exps[4];
        base.exps[4] = 0;
        r.add_term(base, Rational(c * qperm::pow(value, et)));
    }
    return r;
}

Polynomial Polynomial::reduce_unit_sphere() const {
    // d^2 -> 1 - a^2 - b^2 - c^2, applied one power of d^2 at a time.
    Polynomial current = *this;
    while (current.degree_in(Var::D) >= 2) {
        Polynomial next;
        for (const auto &[m, c] : current.terms_) {
            if (m.exps[3] < 2) {
                next.add_term(m, c);
                continue;
            }
            Monomial base = m;
            base.exps[3] = static_cast<uint8_t>(base.exps[3] - 2);
            next.add_term(base, c);
            for (size_t v = 0; v < 3; ++v) {
                Monomial shifted = base;
                shifted.exps[v] = static_cast<uint8_t>(shifted.exps[v] + 2);
                next.add_term(shifted, Rational(-c));
            }
        }
        current = std::move(next);
    }
    return current;
}

double Polynomial::evaluate(const std::array<double, kNumVars> &point) const {
    double total = 0;
    for (const auto &[m, c] : terms_) {
        double term = c.get_d();
        for (size_t v = 0; v < kNumVars; ++v) {
            for (unsigned e = 0; e < m.exps[v]; ++e) {
                term *= point[v];
            }
        }
        total += term;
    }
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    // Highest monomials first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        Rational mag = abs(c);
        if (first) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        bool unit = mag == 1;
        std::string factors;
        for (size_t v = 0; v < kNumVars; ++v) {
            if (m.exps[v] == 0) {
                continue;
            }
            if (!factors.empty()) {
                factors += "*";
            }
            factors += kVarNames[v];
            if (m.exps[v] > 1) {
                factors += "^" + std::to_string(m.exps[v]);
            }
        }
        if (factors.empty()) {
            out += mag.get_str();
        } else if (unit) {
            out += factors;
        } else {
            out += mag.get_str() + "*" + factors;
        }
    }
    return out;
}

}  // namespace qperm
