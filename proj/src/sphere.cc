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

#include "qperm/sphere.h"

#include <cmath>
#include <stdexcept>

namespace qperm {

Rational sphere_moment(unsigned ea, unsigned eb, unsigned ec, unsigned ed) {
    if ((ea | eb | ec | ed) & 1) {
        return 0;
    }
    unsigned half[4] = {ea / 2, eb / 2, ec / 2, ed / 2};
    unsigned n = half[0] + half[1] + half[2] + half[3];
    Integer num = 1;
    for (unsigned h : half) {
        num *= double_factorial_odd(h);
    }
    Integer den = factorial(n + 1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), n);
    return make_rational(num, den);
}

Rational sphere_moment(const Monomial &m) {
    return sphere_moment(m[Var::A], m[Var::B], m[Var::C], m[Var::D]);
}

Rational two_coordinate_moment(unsigned k, unsigned p) {
    if (p > k) {
        throw std::out_of_range("two_coordinate_moment needs p <= k");
    }
    Integer num = factorial(2 * p) * factorial(2 * k - 2 * p);
    Integer den = factorial(k + 1) * factorial(p) * factorial(k - p);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * k);
    return make_rational(num, den);
}

Polynomial integrate_poly(const Polynomial &p) {
    Polynomial out;
    for (const auto &[m, coeff] : p.terms()) {
        Rational w = sphere_moment(m);
        if (w == 0) {
            continue;
        }
        out += Polynomial::monomial(Monomial::of(0, 0, 0, 0, m[Var::T]), coeff * w);
    }
    return out;
}

Rational integrate_constant(const Polynomial &p) {
    if (p.degree_in(Var::T) != 0) {
        throw std::invalid_argument("integrand depends on t; use integrate_poly");
    }
    Rational total = 0;
    for (const auto &[m, coeff] : p.terms()) {
        total += coeff * sphere_moment(m);
    }
    return total;
}

double SphereSampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SphereSampler::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2 * uniform() - 1;
        v = 2 * uniform() - 1;
        s = u * u + v * v;
    } while (s >= 1 || s == 0);
    double factor = std::sqrt(-2 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

SpherePoint SphereSampler::sample() {
    double g[4];
    double norm2 = 0;
    do {
        norm2 = 0;
        for (double &x : g) {
            x = gaussian();
            norm2 += x * x;
        }
    } while (norm2 < 1e-300);
    double inv = 1 / std::sqrt(norm2);
    return {g[0] * inv, g[1] * inv, g[2] * inv, g[3] * inv};
}

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void RunningStats::add(double x) {
    ++count;
    double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
}

void RunningStats::merge(const RunningStats &other) {
    if (other.count == 0) {
        return;
    }
    if (count == 0) {
        *this = other;
        return;
    }
    double n1 = static_cast<double>(count);
    double n2 = static_cast<double>(other.count);
    double delta = other.mean - mean;
    double n = n1 + n2;
    mean += delta * n2 / n;
    m2 += other.m2 + delta * delta * n1 * n2 / n;
    count += other.count;
}

double RunningStats::variance() const {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
}

double RunningStats::standard_error() const {
    return count > 1 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
}

McEstimate mc_integrate(const std::function<double(const SpherePoint &)> &f, uint64_t samples,
                        uint64_t seed, unsigned threads) {
    if (samples < 2) {
        throw std::invalid_argument("mc_integrate needs at least 2 samples");
    }
    auto shards = run_shards<RunningStats>(samples, seed, threads,
                                           [&](SphereSampler &sampler, uint64_t count) {
                                               RunningStats st;
                                               for (uint64_t i = 0; i < count; ++i) {
                                                   st.add(f(sampler.sample()));
                                               }
                                               return st;
                                           });
    RunningStats total;
    for (const auto &s : shards) {
        total.merge(s);
    }
    return {total.mean, total.standard_error(), total.count, seed};
}

unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace qperm
