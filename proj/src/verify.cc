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

#include "qperm/verify.h"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qperm/identities.h"
#include "qperm/laws.h"
#include "qperm/partition.h"
#include "qperm/pauli.h"
#include "qperm/s4.h"
#include "qperm/sphere.h"
#include "qperm/tensor.h"
#include "qperm/weingarten.h"

namespace qperm {

namespace {

/// A check returns an empty string on success, or what went wrong.
using Check = std::function<std::string()>;

class Runner {
   public:
    Runner(std::string suite, const VerifyOptions &options, std::vector<CheckResult> &out)
        : suite_(std::move(suite)), options_(options), out_(out) {
    }

    void operator()(const std::string &name, const Check &check) {
        CheckResult r;
        r.suite = suite_;
        r.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (options_.progress) {
            *options_.progress << "[" << (r.passed ? "pass" : "FAIL") << "] " << suite_ << "/" << name
                               << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
        out_.push_back(std::move(r));
    }

   private:
    std::string suite_;
    const VerifyOptions &options_;
    std::vector<CheckResult> &out_;
};

std::string kname(const std::string &what, size_t k) {
    return what + " k=" + std::to_string(k);
}

bool series_match(const FormalSeries &x, const FormalSeries &y, unsigned order) {
    for (unsigned n = 0; n <= order; ++n) {
        Polynomial a = n <= x.order() ? x[n] : Polynomial();
        Polynomial b = n <= y.order() ? y[n] : Polynomial();
        if (!(a - b).is_zero()) {
            return false;
        }
    }
    return true;
}

bool reduced_equal(const Polynomial &x, const Polynomial &y) {
    return (x - y).reduce_unit_sphere().is_zero();
}

/// Coefficients of a product of monic polynomials given low-to-high.
std::vector<Polynomial> poly_product(const std::vector<Polynomial> &x,
                                     const std::vector<Polynomial> &y) {
    std::vector<Polynomial> out(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i) {
        for (size_t j = 0; j < y.size(); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    return out;
}

std::string compare_charpoly(const VariableSpec &v, const std::vector<Polynomial> &expected) {
    auto got = charpoly(v, true);
    for (size_t n = 0; n < got.size(); ++n) {
        if (!reduced_equal(got[n], expected[n])) {
            return v.name() + ": coefficient of y^" + std::to_string(n) + " is " +
                   got[n].to_string();
        }
    }
    return "";
}

// ---------------------------------------------------------------- algebra

void algebra_suite(const VerifyOptions &options, std::vector<CheckResult> &out) {
    Runner run("algebra", options, out);
    const size_t max_k = options.max_k;

    run("pauli relations", [] {
        auto p = [](int i, int j) { return pauli_product(PauliIndex(i), PauliIndex(j)); };
        for (int i = 1; i <= 4; ++i) {
            if (!(p(1, i) == SignedPauli{1, PauliIndex(i)}) || !(p(i, 1) == p(1, i))) {
                return std::string("c1 is not the unit");
            }
            if (i > 1 && !(p(i, i) == SignedPauli{-1, PauliIndex(1)})) {
                return "c" + std::to_string(i) + "^2 != -1";
            }
        }
        if (!(p(2, 3) == SignedPauli{1, PauliIndex(4)}) || !(p(3, 4) == SignedPauli{1, PauliIndex(2)}) ||
            !(p(4, 2) == SignedPauli{1, PauliIndex(3)})) {
            return std::string("cyclic products do not match c2c3=c4, c3c4=c2, c4c2=c3");
        }
        return std::string();
    });

    run("magic unitary", [] {
        const PolyMatrix4 id = PolyMatrix4::identity();
        for (int i = 1; i <= 4; ++i) {
            PolyMatrix4 row, col;
            for (int j = 1; j <= 4; ++j) {
                PolyMatrix4 pij = projection_matrix(PauliIndex(i), PauliIndex(j));
                if (!((pij * pij - pij).reduce_unit_sphere() == PolyMatrix4())) {
                    return "pi_" + std::to_string(i) + std::to_string(j) + " is not idempotent";
                }
                if (!(pij.transpose() == pij)) {
                    return "pi_" + std::to_string(i) + std::to_string(j) + " is not symmetric";
                }
                row = row + pij;
                col = col + projection_matrix(PauliIndex(j), PauliIndex(i));
            }
            if (!((row - id).reduce_unit_sphere() == PolyMatrix4()) ||
                !((col - id).reduce_unit_sphere() == PolyMatrix4())) {
                return "row or column " + std::to_string(i) + " does not sum to 1";
            }
        }
        return std::string();
    });

    for (size_t k = 1; k <= max_k; ++k) {
        run(kname("nc count", k), [k] {
            auto nc = enumerate_nc(k);
            if (nc.size() != catalan(k)) {
                return "|NC| = " + std::to_string(nc.size());
            }
            for (const auto &p : nc) {
                NCPartition kc = kreweras(p);
                if (!interleaved_noncrossing(p, kc)) {
                    return "Kreweras complement of " + p.to_string() + " crosses it";
                }
                if (kc.block_count() + p.block_count() != k + 1) {
                    return "|p| + |K(p)| != k + 1 at " + p.to_string();
                }
            }
            return std::string();
        });
    }

    for (size_t k = 2; k <= max_k; ++k) {
        run(kname("R(c_0k) = 2 f12 f23 ...", k), [k] {
            PauliTensor expected = PauliTensor::unit(k) * Rational(2);
            for (int j = 1; j + 1 <= static_cast<int>(k); ++j) {
                expected = tensor_multiply(expected, leg_embed(f_element(), {j, j + 1}, k));
            }
            if (!(apply_R(c_p_vector(SetPartition::singletons(k))) == expected)) {
                return std::string("mismatch");
            }
            return std::string();
        });
    }

    for (size_t k = 1; k <= max_k; ++k) {
        run(kname("R(c_p) = omega(K(p))", k), [k] {
            for (const auto &p : enumerate_nc(k)) {
                if (!(apply_R(c_p_vector(p)) == omega(kreweras(p)))) {
                    return "fails at p = " + p.to_string();
                }
            }
            return std::string();
        });
    }

    if (max_k >= 6) {
        run("worked example {1,5}{2}{3,4}{6}", [] {
            NCPartition p = NCPartition::parse("{1,5}{2}{3,4}{6}");
            if (kreweras(p).to_string() != "{1,2,4}{3}{5,6}") {
                return "K(p) = " + kreweras(p).to_string();
            }
            PauliTensor f = f_element();
            PauliTensor expected = tensor_multiply(
                tensor_multiply(leg_embed(f, {1, 2}, 6), leg_embed(f, {2, 4}, 6)),
                leg_embed(f, {5, 6}, 6)) *
                Rational(2);
            if (!(apply_R(c_p_vector(p)) == expected)) {
                return std::string("R(c_p) != 2 f12 f24 f56");
            }
            return std::string();
        });
    }

    for (size_t k = 1; k <= max_k; ++k) {
        run(kname("fixed-point projection", k), [k] {
            FixedPointProjection E(k);
            RStarER model(E);
            const auto &nc = E.partitions();
            for (const auto &p : nc) {
                if (!(model.apply(c_p_vector(p)) == c_p_vector(p))) {
                    return "R*ER(c_p) != c_p at p = " + p.to_string();
                }
            }
            for (const auto &w : E.omegas()) {
                if (!(E.apply(w) == w)) {
                    return std::string("E does not fix omega(p)");
                }
            }
            const RationalMatrix &g = E.omega_gram();
            const RationalMatrix &gi = E.omega_gram_inverse();
            if (!(g * gi == RationalMatrix::identity(nc.size())) || !(gi.transpose() == gi)) {
                return std::string("Gram inverse is not a symmetric inverse");
            }
            if (rank(g) != nc.size() || E.trace() != Rational(catalan(k))) {
                return "rank/trace of E is not C_k = " + catalan(k).get_str();
            }
            if (k <= 3) {
                RationalMatrix d = E.dense().matrix();
                if (!(d * d == d) || !(d.transpose() == d)) {
                    return std::string("dense E is not an orthogonal projection");
                }
                if (rank(d) != nc.size()) {
                    return std::string("dense rank of E is not C_k");
                }
            }
            return std::string();
        });
    }

    for (size_t k = 1; k <= std::min<size_t>(max_k, 4); ++k) {
        unsigned threads = options.threads;
        run(kname("E by integration", k), [k, threads] {
            if (!(E_via_integration(k, threads) == FixedPointProjection(k).dense())) {
                return std::string("integrated E differs from the Gram construction");
            }
            return std::string();
        });
    }
}

// ----------------------------------------------------------- faithfulness

void faithfulness_suite(const VerifyOptions &options, std::vector<CheckResult> &out) {
    Runner run("faithfulness", options, out);
    for (size_t k = 1; k <= options.max_k; ++k) {
        run(kname("gram and weingarten", k), [k] {
            GramMatrix g = gram(k);
            if (!(g.entries == gram_by_counting(k))) {
                return std::string("Gram entries differ from direct counting");
            }
            if (!(weingarten_matrix(k) * g.entries == RationalMatrix::identity(g.partitions.size()))) {
                return std::string("W G != 1");
            }
            return std::string();
        });
        run(kname("model moments = Haar moments", k), [k] {
            MomentMatrixReport r = verify_faithfulness(k);
            if (!r.passed) {
                return r.first_mismatch;
            }
            return std::string();
        });
    }
}

// ------------------------------------------------------------------ laws

void laws_suite(const VerifyOptions &options, std::vector<CheckResult> &out) {
    Runner run("laws", options, out);
    const Rational half = make_rational(1, 2);

    run("n3 moments", [] {
        const char *table[] = {"3/4",     "5/4",    "5/2",       "109/20",   "25/2",
                               "4157/140", "1449/20", "75877/420", "64223/140"};
        auto m = exact_moments(VariableSpec::parse("n3"), 9);
        for (unsigned k = 1; k <= 9; ++k) {
            if (m[k - 1].constant_value() != parse_rational(table[k - 1])) {
                return "k=" + std::to_string(k) + ": " + m[k - 1].to_string();
            }
        }
        return std::string();
    });

    run("M1 M2 M4 moments", [] {
        for (int s : {1, 2, 4}) {
            SpectralLaw law = averaged_law(s);
            auto m = exact_moments(VariableSpec::parse("m" + std::to_string(s)), 10);
            for (unsigned k = 1; k <= 10; ++k) {
                Rational expected = s == 1   ? make_rational(1, 4)
                                    : s == 2 ? make_rational(1, 2 * (k + 1))
                                             : Rational(Rational(catalan(k)) / pow(Rational(4), k));
                Rational got = m[k - 1].constant_value();
                if (got != expected || law.moment(k) != expected) {
                    return "M" + std::to_string(s) + " k=" + std::to_string(k) + ": " +
                           to_string(got);
                }
            }
        }
        return std::string();
    });

    run("M3 second moment", [] {
        Rational m = exact_moment(VariableSpec::parse("m3"), 2);
        Rational c = m3_comparison_moment(2);
        if (m != make_rational(5, 36) || c != make_rational(15, 32) || m == c) {
            return "got " + to_string(m) + " and " + to_string(c);
        }
        try {
            averaged_law(3);
        } catch (const std::invalid_argument &) {
            return std::string();
        }
        return std::string("a law for M3 was returned");
    });

    run("characteristic polynomials", [] {
        const Polynomial a = Polynomial::variable(Var::A), b = Polynomial::variable(Var::B),
                         c = Polynomial::variable(Var::C), d = Polynomial::variable(Var::D),
                         t = Polynomial::variable(Var::T);
        const Polynomial y0 = 0, one = 1, s = one - t * t;
        const Polynomial a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
        std::string r;
        r = compare_charpoly(VariableSpec::parse("m1"), {y0, y0, y0, Polynomial(-1), one});
        if (!r.empty()) return r;
        r = compare_charpoly(VariableSpec::parse("m2"),
                             poly_product({y0, y0, one}, poly_product({-(a2 + b2), one},
                                                                      {-(c2 + d2), one})));
        if (!r.empty()) return r;
        r = compare_charpoly(VariableSpec::parse("m4"),
                             poly_product(poly_product({-a2, one}, {-b2, one}),
                                          poly_product({-c2, one}, {-d2, one})));
        if (!r.empty()) return r;
        Polynomial K = (a2 * b2 + a2 * c2 + a2 * d2 + b2 * c2 + b2 * d2 + c2 * d2) *
                       make_rational(8, 9);
        Polynomial L = (a2 * b2 * c2 + a2 * b2 * d2 + a2 * c2 * d2 + b2 * c2 * d2) *
                       make_rational(16, 27);
        r = compare_charpoly(VariableSpec::parse("m3"), {y0, -L, K, Polynomial(-1), one});
        if (!r.empty()) return r;
        r = compare_charpoly(VariableSpec::parse("wt"),
                             poly_product({y0, y0, one},
                                          {s * (a2 + b2) * (c2 + d2), Polynomial(-1), one}));
        if (!r.empty()) return r;
        return compare_charpoly(VariableSpec::parse("vt"),
                                poly_product({s * a2 * b2, -(a2 + b2), one},
                                             {s * c2 * d2, -(c2 + d2), one}));
    });

    run("wt series = moments", [] {
        VariableSpec v = VariableSpec::parse("wt");
        auto m = exact_moments(v, 8);
        FormalSeries g = cauchy_series(v, 9);
        for (unsigned k = 1; k <= 8; ++k) {
            if (!(g[k + 1] - m[k - 1]).is_zero()) {
                return "k=" + std::to_string(k) + ": " + g[k + 1].to_string();
            }
        }
        return std::string();
    });

    run("vt derivative series = moments", [] {
        VariableSpec v = VariableSpec::parse("vt");
        auto m = exact_moments(v, 8);
        FormalSeries g = cauchy_series(v, 10);
        for (unsigned k = 1; k <= 8; ++k) {
            if (!(g[k + 2] + m[k - 1] * Rational(k + 1)).is_zero()) {
                return "k=" + std::to_string(k) + ": " + g[k + 2].to_string();
            }
        }
        return std::string();
    });

    run("2x2 block series", [half] {
        // Both variables split into 2 x 2 blocks y^2 - B y + C.
        const Polynomial a2 = Polynomial::variable(Var::A).pow(2),
                         b2 = Polynomial::variable(Var::B).pow(2),
                         c2 = Polynomial::variable(Var::C).pow(2),
                         d2 = Polynomial::variable(Var::D).pow(2),
                         t = Polynomial::variable(Var::T);
        const Polynomial s = Polynomial(1) - t * t;
        const unsigned order = 9;
        FormalSeries wt = block_cauchy_series(
            [&](unsigned, unsigned p) {
                return integrate_poly((s * (a2 + b2) * (c2 + d2)).pow(p));
            },
            order);
        wt = (wt + FormalSeries::x(order)) * Polynomial(half);
        if (!series_match(wt, cauchy_series(VariableSpec::parse("wt"), order), order)) {
            return std::string("w_t block series differs");
        }
        FormalSeries vt = block_cauchy_series(
            [&](unsigned q, unsigned p) {
                return integrate_poly((a2 + b2).pow(q) * (s * a2 * b2).pow(p));
            },
            order);
        if (!series_match(xi_derivative(vt), cauchy_series(VariableSpec::parse("vt"), order + 1),
                          order + 1)) {
            return std::string("v_t block series differs");
        }
        return std::string();
    });

    run("endpoint series", [] {
        const unsigned order = 14;
        auto at = [&](const char *name, long t) {
            return cauchy_series(VariableSpec::parse(name, Rational(t)), order);
        };
        if (!series_match(at("wt", 0), g2_series(order), order)) return std::string("w_0 != M2");
        if (!series_match(at("wt", 1), g1_series(order), order)) return std::string("w_1 != M1");
        if (!series_match(at("vt", 1), xi_derivative(g2_series(order)), order))
            return std::string("v_1' != M2'");
        if (!series_match(at("vt", 0), xi_derivative(g4_series(order)), order))
            return std::string("v_0' != M4'");
        if (!series_match(at("wt", -1), g1_series(order), order)) return std::string("w_-1 != M1");
        return std::string();
    });

    run("endpoint closed forms", [] {
        const Complex points[] = {{0.5, 0.3}, {2.0, -1.0}, {-0.7, 0.01}, {1.5, 1e-3}, {0.1, 2.0}};
        auto check = [](Complex x, Complex y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); };
        auto w = [](long t) { return VariableSpec::parse("wt", Rational(t)); };
        auto v = [](long t) { return VariableSpec::parse("vt", Rational(t)); };
        VariableSpec m1 = VariableSpec::parse("m1"), m2 = VariableSpec::parse("m2"),
                     m4 = VariableSpec::parse("m4");
        for (Complex xi : points) {
            if (!check(cauchy_closed(w(0), xi), cauchy_closed(m2, xi)) ||
                !check(cauchy_closed(w(1), xi), cauchy_closed(m1, xi)) ||
                !check(cauchy_closed(v(1), xi), cauchy_closed_derivative(m2, xi)) ||
                !check(cauchy_closed(v(0), xi), cauchy_closed_derivative(m4, xi))) {
                std::ostringstream os;
                os << "mismatch at xi = " << xi;
                return os.str();
            }
        }
        return std::string();
    });

    run("sphere integrals", [] {
        for (unsigned k = 0; k <= 12; ++k) {
            for (unsigned p = 0; p <= k; ++p) {
                if (two_coordinate_moment(k, p) != sphere_moment(2 * k - 2 * p, 2 * p, 0, 0)) {
                    return "k=" + std::to_string(k) + ", p=" + std::to_string(p);
                }
            }
        }
        return std::string();
    });

    run("S4 laws", [] {
        auto r = [](long n, long d) { return make_rational(n, d); };
        const std::array<Rational, 4> ts[] = {{1, 0, 0, 0},
                                              {r(1, 2), r(1, 2), 0, 0},
                                              {r(1, 3), r(1, 3), r(1, 3), 0},
                                              {r(1, 4), r(1, 4), r(1, 4), r(1, 4)}};
        const std::vector<AtomicAtom> laws[] = {
            {{0, r(18, 24)}, {1, r(6, 24)}},
            {{0, r(14, 24)}, {r(1, 2), r(8, 24)}, {1, r(2, 24)}},
            {{0, r(11, 24)}, {r(1, 3), r(9, 24)}, {r(2, 3), r(3, 24)}, {1, r(1, 24)}},
            {{0, r(9, 24)}, {r(1, 4), r(8, 24)}, {r(1, 2), r(6, 24)}, {1, r(1, 24)}}};
        for (size_t n = 0; n < 4; ++n) {
            if (!(classical_law(ts[n]) == AtomicLaw(laws[n]))) {
                return "m" + std::to_string(n + 1) + ": " + classical_law(ts[n]).to_string();
            }
        }
        std::mt19937_64 rng(2026);
        std::uniform_int_distribution<long> pick(0, 20);
        for (int trial = 0; trial < 100; ++trial) {
            std::array<long, 4> raw{};
            long total = 0;
            while (total == 0) {
                total = 0;
                for (auto &x : raw) {
                    x = pick(rng);
                    total += x;
                }
            }
            std::array<Rational, 4> t;
            for (size_t i = 0; i < 4; ++i) {
                t[i] = make_rational(raw[i], total);
            }
            AtomicLaw law = classical_law_enumerated(t);
            if (!(law == classical_law_closed(t)) || law.moment(1) != r(1, 4) ||
                law.total_weight() != 1) {
                return "weights " + to_string(t[0]) + "," + to_string(t[1]) + "," +
                       to_string(t[2]) + "," + to_string(t[3]);
            }
        }
        if (fixed_point_distribution() != std::array<unsigned, 5>{9, 8, 6, 0, 1}) {
            return std::string("fixed-point distribution is not 9/8/6/0/1");
        }
        return std::string();
    });
}

void identities_suite(const VerifyOptions &options, std::vector<CheckResult> &out) {
    Runner run("identities", options, out);
    run("binomial identities p,q <= 20, series to order 30", [] {
        IdentityReport r = verify_standard_identities(20, 30);
        return r.passed() ? std::string() : r.first_failure;
    });
}

}  // namespace

Suite parse_suite(std::string_view name) {
    if (name == "algebra") return Suite::Algebra;
    if (name == "faithfulness") return Suite::Faithfulness;
    if (name == "laws") return Suite::Laws;
    if (name == "identities") return Suite::Identities;
    if (name == "all") return Suite::All;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string suite_name(Suite suite) {
    switch (suite) {
        case Suite::Algebra:
            return "algebra";
        case Suite::Faithfulness:
            return "faithfulness";
        case Suite::Laws:
            return "laws";
        case Suite::Identities:
            return "identities";
        case Suite::All:
            return "all";
    }
    return "?";
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions &options) {
    std::vector<CheckResult> out;
    if (suite == Suite::Algebra || suite == Suite::All) {
        algebra_suite(options, out);
    }
    if (suite == Suite::Faithfulness || suite == Suite::All) {
        faithfulness_suite(options, out);
    }
    if (suite == Suite::Laws || suite == Suite::All) {
        laws_suite(options, out);
    }
    if (suite == Suite::Identities || suite == Suite::All) {
        identities_suite(options, out);
    }
    return out;
}

}  // namespace qperm
