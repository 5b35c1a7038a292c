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

#include "qperm/weingarten.h"

#include <chrono>
#include <random>
#include <stdexcept>

#include "qperm/pauli.h"
#include "qperm/sphere.h"

namespace qperm {

namespace {

void require_same_length(const MultiIndex &i, const MultiIndex &j) {
    if (i.size() != j.size() || i.size() == 0) {
        throw std::invalid_argument("multi-indices " + i.to_string() + " and " + j.to_string() +
                                    " must have the same positive length");
    }
}

/// Kernel partition of a multi-index: legs with equal values share a block.
SetPartition kernel(const MultiIndex &i) {
    std::vector<int> labels(i.values().begin(), i.values().end());
    return SetPartition::from_labels(labels);
}

Rational abs_value(const Rational &x) {
    return x < 0 ? Rational(-x) : x;
}

}  // namespace

GramMatrix gram(size_t k) {
    GramMatrix g;
    g.k = k;
    g.partitions = enumerate_nc(k);
    const size_t n = g.partitions.size();
    g.entries = RationalMatrix(n, n);
    for (size_t p = 0; p < n; ++p) {
        for (size_t q = p; q < n; ++q) {
            Integer v = 1;
            mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(),
                         2 * join(g.partitions[p], g.partitions[q]).block_count());
            g.entries(p, q) = g.entries(q, p) = Rational(v);
        }
    }
    return g;
}

RationalMatrix gram_by_counting(size_t k) {
    auto nc = enumerate_nc(k);
    RationalMatrix m(nc.size(), nc.size());
    for (uint64_t code = 0; code < basis_size(k); ++code) {
        MultiIndex i = MultiIndex::from_code(code, k);
        std::vector<size_t> hits;
        for (size_t p = 0; p < nc.size(); ++p) {
            if (delta(nc[p], i)) {
                hits.push_back(p);
            }
        }
        for (size_t p : hits) {
            for (size_t q : hits) {
                m(p, q) += 1;
            }
        }
    }
    return m;
}

RationalMatrix weingarten_matrix(size_t k) {
    return inverse(gram(k).entries);
}

WeingartenCalculator::WeingartenCalculator(size_t k) : k_(k), gram_(gram(k)) {
    w_ = inverse(gram_.entries);
    const auto kernels = enumerate_set_partitions(k);
    const auto &nc = gram_.partitions;
    // admissible[a]: partitions p with delta(p, i) = 1 for every i in class a.
    std::vector<std::vector<size_t>> admissible(kernels.size());
    for (size_t a = 0; a < kernels.size(); ++a) {
        for (size_t p = 0; p < nc.size(); ++p) {
            if (nc[p].refines(kernels[a])) {
                admissible[a].push_back(p);
            }
        }
    }
    class_moment_.assign(kernels.size(), std::vector<Rational>(kernels.size()));
    for (size_t a = 0; a < kernels.size(); ++a) {
        for (size_t b = 0; b < kernels.size(); ++b) {
            Rational total = 0;
            for (size_t p : admissible[a]) {
                for (size_t q : admissible[b]) {
                    total += w_(p, q);
                }
            }
            class_moment_[a][b] = total;
        }
    }
    std::map<SetPartition, size_t> index;
    for (size_t a = 0; a < kernels.size(); ++a) {
        index.emplace(kernels[a], a);
    }
    class_of_code_.resize(basis_size(k));
    for (uint64_t code = 0; code < basis_size(k); ++code) {
        class_of_code_[code] = index.at(kernel(MultiIndex::from_code(code, k)));
    }
}

size_t WeingartenCalculator::kernel_class(uint64_t code) const {
    if (code >= class_of_code_.size()) {
        throw std::out_of_range("multi-index code out of range");
    }
    return class_of_code_[code];
}

Rational WeingartenCalculator::moment(uint64_t i, uint64_t j) const {
    return class_moment_[kernel_class(i)][kernel_class(j)];
}

Rational WeingartenCalculator::moment(const MultiIndex &i, const MultiIndex &j) const {
    require_same_length(i, j);
    if (i.size() != k_) {
        throw std::invalid_argument("multi-index length does not match the calculator order");
    }
    return moment(i.code(), j.code());
}

Rational haar_moment_u(const MultiIndex &i, const MultiIndex &j) {
    require_same_length(i, j);
    return WeingartenCalculator(i.size()).moment(i, j);
}

Rational model_moment_polynomial(const MultiIndex &i, const MultiIndex &j) {
    require_same_length(i, j);
    PolyMatrix4 prod = projection_matrix(i.at(0), j.at(0));
    for (size_t l = 1; l < i.size(); ++l) {
        prod = prod * projection_matrix(i.at(l), j.at(l));
    }
    return integrate_constant(prod.trace() * make_rational(1, 4));
}

Rational model_moment_operator(const MultiIndex &i, const MultiIndex &j,
                               const FixedPointProjection &E) {
    require_same_length(i, j);
    if (E.legs() != i.size()) {
        throw std::invalid_argument("projection order does not match multi-index length");
    }
    PauliTensor v = apply_R_star(E.apply(apply_R(PauliTensor::basis(j))));
    return v.coefficient(i);
}

Rational model_moment(const MultiIndex &i, const MultiIndex &j, Pipeline pipeline) {
    require_same_length(i, j);
    if (pipeline == Pipeline::Polynomial) {
        return model_moment_polynomial(i, j);
    }
    FixedPointProjection E(i.size());
    return model_moment_operator(i, j, E);
}

MomentMatrixReport verify_faithfulness(size_t k, const FaithfulnessOptions &options) {
    auto start = std::chrono::steady_clock::now();
    MomentMatrixReport report;
    report.k = k;
    FixedPointProjection E(k);
    RStarER model(E);
    WeingartenCalculator haar(k);
    const uint64_t dim = basis_size(k);

    auto record = [&](uint64_t i, uint64_t j, const Rational &p, const Rational &u,
                      const char *what) {
        Rational diff = abs_value(p - u);
        if (diff > report.max_discrepancy) {
            report.max_discrepancy = diff;
        }
        if (diff != 0 && report.first_mismatch.empty()) {
            report.first_mismatch = std::string(what) + " i=" +
                                    MultiIndex::from_code(i, k).to_string() + " j=" +
                                    MultiIndex::from_code(j, k).to_string() + ": model " +
                                    to_string(p) + " vs haar " + to_string(u);
        }
    };

    for (uint64_t i = 0; i < dim; ++i) {
        for (uint64_t j = 0; j < dim; ++j) {
            Rational p = model.entry(i, j);
            Rational u = haar.moment(i, j);
            record(i, j, p, u, "operator");
            ++report.compared;
            if (p != 0) {
                ++report.nonzero_entries;
            }
        }
    }

    // Independent recomputation of a subset through the unfactored operator
    // chain and the symbolic polynomial expansion.
    auto cross_check = [&](uint64_t i, uint64_t j) {
        MultiIndex mi = MultiIndex::from_code(i, k);
        MultiIndex mj = MultiIndex::from_code(j, k);
        Rational u = haar.moment(i, j);
        record(i, j, model_moment_operator(mi, mj, E), u, "unfactored operator");
        record(i, j, model_moment_polynomial(mi, mj), u, "polynomial");
        ++report.cross_checked;
    };
    if (k <= options.full_cross_check_max_k) {
        for (uint64_t i = 0; i < dim; ++i) {
            for (uint64_t j = 0; j < dim; ++j) {
                cross_check(i, j);
            }
        }
    } else {
        std::mt19937_64 rng(mix_seed(options.seed, k));
        std::uniform_int_distribution<uint64_t> pick(0, dim - 1);
        for (uint64_t s = 0; s < options.sampled_pairs; ++s) {
            uint64_t i = pick(rng);
            uint64_t j = pick(rng);
            cross_check(i, j);
        }
    }

    report.passed = report.max_discrepancy == 0;
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace qperm
