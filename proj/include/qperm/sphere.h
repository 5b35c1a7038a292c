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

#ifndef QPERM_SPHERE_H
#define QPERM_SPHERE_H

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

#include "qperm/polynomial.h"

namespace qperm {

/// Exact integral of a^ea b^eb c^ec d^ed over the uniform probability
/// measure on S^3. Zero unless all exponents are even; otherwise, with
/// half-exponents (p,q,r,s) and n = p+q+r+s, the value is
/// prod (2e-1)!! / (2^n (n+1)!). This is the Gaussian moment divided by
/// the even moment 2^n (n+1)! of a chi variable with four degrees of
/// freedom.
Rational sphere_moment(unsigned ea, unsigned eb, unsigned ec, unsigned ed);
/// Same, reading the a..d exponents of `m` (the t exponent is ignored).
Rational sphere_moment(const Monomial &m);

/// int a^(2k-2p) b^(2p) = 4^-k/(k+1)! * (2p)!(2k-2p)!/(p!(k-p)!).
Rational two_coordinate_moment(unsigned k, unsigned p);

/// Integrates out a, b, c, d; the result is a polynomial in t alone.
Polynomial integrate_poly(const Polynomial &p);
/// Like integrate_poly but requires a t-free input; throws otherwise.
Rational integrate_constant(const Polynomial &p);

struct SpherePoint {
    double a = 1, b = 0, c = 0, d = 0;

    std::array<double, kNumVars> as_point(double t = 0) const {
        return {a, b, c, d, t};
    }
};

/// Uniform points on S^3 from a seeded std::mt19937_64: four standard
/// normals (Marsaglia polar method) normalized to unit length.
class SphereSampler {
   public:
    explicit SphereSampler(uint64_t seed) : engine_(seed) {
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    double gaussian();
    SpherePoint sample();

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

/// SplitMix64 finalizer; used to derive independent shard seeds.
uint64_t mix_seed(uint64_t seed, uint64_t stream);

/// Running mean and variance (Welford), mergeable with Chan's formula.
struct RunningStats {
    uint64_t count = 0;
    double mean = 0;
    double m2 = 0;

    void add(double x);
    void merge(const RunningStats &other);
    double variance() const;
    double standard_error() const;
};

struct McEstimate {
    double value = 0;
    double standard_error = 0;
    uint64_t samples = 0;
    uint64_t seed = 0;
};

/// Sample work is cut into this many shards, each with its own seed, so
/// results do not depend on the worker count.
inline constexpr unsigned kMcShards = 64;

/// Runs `fn(sampler, count)` for every shard on up to `threads` workers
/// and returns the per-shard results in shard order.
template <class Result>
std::vector<Result> run_shards(uint64_t samples, uint64_t seed, unsigned threads,
                               const std::function<Result(SphereSampler &, uint64_t)> &fn) {
    std::vector<Result> results(kMcShards);
    auto work = [&](unsigned shard) {
        uint64_t begin = samples * shard / kMcShards;
        uint64_t end = samples * (shard + 1) / kMcShards;
        SphereSampler sampler(mix_seed(seed, shard));
        results[shard] = fn(sampler, end - begin);
    };
    threads = std::clamp(threads, 1u, kMcShards);
    if (threads == 1) {
        for (unsigned s = 0; s < kMcShards; ++s) {
            work(s);
        }
        return results;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (unsigned s = w; s < kMcShards; s += threads) {
                work(s);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    return results;
}

/// Sample mean and standard error of f over `samples` uniform points.
/// Throws std::invalid_argument for samples < 2.
McEstimate mc_integrate(const std::function<double(const SpherePoint &)> &f, uint64_t samples,
                        uint64_t seed, unsigned threads = 1);

unsigned default_threads();

}  // namespace qperm

#endif
