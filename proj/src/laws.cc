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

#include "qperm/laws.h"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qperm/partition.h"
#include "qperm/pauli.h"

namespace qperm {

namespace {

PolyMatrix4 pi_ii(int i) {
    return projection_matrix(PauliIndex(i), PauliIndex(i));
}

Polynomial parameter_s(const VariableSpec &v) {
    Polynomial t = v.t ? Polynomial(*v.t) : Polynomial::variable(Var::T);
    return Polynomial(1) - t * t;
}

void require_parameter(const VariableSpec &v) {
    if (v.has_parameter() && !v.t) {
        throw std::invalid_argument("variable " + v.name() + " needs a value for t");
    }
}

void require_off_support(Complex xi) {
    if (xi.imag() == 0 && xi.real() >= 0 && xi.real() <= 1) {
        throw std::domain_error("Cauchy transform evaluated on the branch cut [0, 1]");
    }
}

/// asinh(w)/w, continued to w = 0.
Complex asinh_over(Complex w) {
    if (std::abs(w) < 1e-4) {
        Complex w2 = w * w;
        return 1.0 - w2 / 6.0 + 3.0 * w2 * w2 / 40.0;
    }
    return std::asinh(w) / w;
}

/// Extrapolates samples f(h_i) to h = 0 with Neville's scheme.
double neville_at_zero(const std::vector<double> &h, std::vector<double> f) {
    const size_t n = h.size();
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = 0; i + level < n; ++i) {
            double hi = h[i];
            double hj = h[i + level];
            f[i] = (hj * f[i] - hi * f[i + 1]) / (hj - hi);
        }
    }
    return f[0];
}

DensityPoint extrapolate(double x, const std::vector<double> &h, const std::vector<double> &f,
                         double tolerance) {
    DensityPoint out;
    out.x = x;
    out.density = neville_at_zero(h, f);
    if (h.size() >= 3) {
        std::vector<double> h2(h.begin() + 1, h.end());
        std::vector<double> f2(f.begin() + 1, f.end());
        out.error_estimate = std::abs(out.density - neville_at_zero(h2, f2));
    } else {
        out.error_estimate = std::abs(f.back() - f.front());
    }
    out.converged = std::isfinite(out.density) &&
                    out.error_estimate <= tolerance * std::max(1.0, std::abs(out.density));
    return out;
}

/// sum_n f_n u^n at u = 1/xi.
Complex evaluate_series(const std::vector<double> &coeffs, Complex xi) {
    Complex u = 1.0 / xi;
    Complex acc = 0;
    for (size_t n = coeffs.size(); n-- > 0;) {
        acc = acc * u + coeffs[n];
    }
    return acc;
}

/// Series coefficients of G for v_t at a fixed rational t, recovered from
/// the G' series: the u^(k+2) coefficient of G' is -(k+1) m_k.
std::vector<double> vt_g_coefficients(const Rational &t) {
    constexpr unsigned kOrder = 96;
    static std::mutex mu;
    static std::map<Rational, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) {
        return it->second;
    }
    FormalSeries gp = cauchy_series(VariableSpec{VariableKind::Vt, t}, kOrder + 1);
    std::vector<double> g(kOrder + 1, 0.0);
    for (unsigned k = 0; k + 1 <= kOrder; ++k) {
        Rational mk = -gp[k + 2].constant_value() / Rational(k + 1);
        g[k + 1] = to_double(mk);
    }
    cache.emplace(t, g);
    return g;
}

/// G for v_t: series at |xi| >= 2, otherwise the series value at
/// Re(xi) + 2i plus the integral of G' down the vertical line.
Complex vt_transform(const VariableSpec &v, Complex xi) {
    const auto coeffs = vt_g_coefficients(*v.t);
    if (std::abs(xi) >= 2) {
        return evaluate_series(coeffs, xi);
    }
    if (xi.imag() <= 0) {
        throw std::domain_error("v_t transform is evaluated in the upper half-plane only");
    }
    const double x = xi.real();
    const double top = 2.0;
    Complex g = evaluate_series(coeffs, Complex(x, top));
    using Gauss = boost::math::quadrature::gauss<double, 30>;
    const auto &nodes = Gauss::abscissa();
    const auto &weights = Gauss::weights();
    // Panels with geometrically shrinking heights, four per decade.
    const double ratio = std::pow(10.0, -0.25);
    double hi = top;
    while (hi > xi.imag()) {
        double lo = std::max(hi * ratio, xi.imag());
        double mid = 0.5 * (hi + lo);
        double half = 0.5 * (hi - lo);
        Complex panel = 0;
        for (size_t n = 0; n < nodes.size(); ++n) {
            for (double sgn : {-1.0, 1.0}) {
                double tau = mid + sgn * half * nodes[n];
                panel += weights[n] * cauchy_closed(v, Complex(x, tau));
            }
        }
        // dz = i dtau, integrating from hi down to lo.
        g -= Complex(0, 1) * panel * half;
        hi = lo;
    }
    return g;
}

/// A polynomial matrix with double coefficients, for fast sampling.
class CompiledMatrix {
   public:
    explicit CompiledMatrix(const PolyMatrix4 &m) {
        for (size_t e = 0; e < 16; ++e) {
            for (const auto &[mono, c] : m(e / 4, e % 4).terms()) {
                Term term;
                term.coefficient = c.get_d();
                for (size_t v = 0; v < 4; ++v) {
                    term.exps[v] = mono.exps[v];
                }
                entries_[e].push_back(term);
            }
        }
    }

    std::array<double, 16> evaluate(const SpherePoint &p) const {
        const double xs[4] = {p.a, p.b, p.c, p.d};
        std::array<double, 16> out{};
        for (size_t e = 0; e < 16; ++e) {
            double total = 0;
            for (const auto &term : entries_[e]) {
                double value = term.coefficient;
                for (size_t v = 0; v < 4; ++v) {
                    for (unsigned r = 0; r < term.exps[v]; ++r) {
                        value *= xs[v];
                    }
                }
                total += value;
            }
            out[e] = total;
        }
        return out;
    }

   private:
    struct Term {
        double coefficient = 0;
        std::array<uint8_t, 4> exps{};
    };
    std::array<std::vector<Term>, 16> entries_;
};

}  // namespace

std::string VariableSpec::name() const {
    switch (kind) {
        case VariableKind::M1:
            return "m1";
        case VariableKind::M2:
            return "m2";
        case VariableKind::M3:
            return "m3";
        case VariableKind::M4:
            return "m4";
        case VariableKind::N3:
            return "n3";
        case VariableKind::Wt:
            return "wt";
        case VariableKind::Vt:
            return "vt";
    }
    return "?";
}

VariableSpec VariableSpec::parse(std::string_view name, std::optional<Rational> t) {
    std::string lower;
    for (char ch : name) {
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    static const std::map<std::string, VariableKind> kinds = {
        {"m1", VariableKind::M1}, {"m2", VariableKind::M2}, {"m3", VariableKind::M3},
        {"m4", VariableKind::M4}, {"n3", VariableKind::N3}, {"wt", VariableKind::Wt},
        {"vt", VariableKind::Vt}};
    auto it = kinds.find(lower);
    if (it == kinds.end()) {
        throw std::invalid_argument("unknown variable '" + std::string(name) +
                                    "' (expected m1, m2, m3, m4, n3, wt or vt)");
    }
    VariableSpec v{it->second, std::nullopt};
    if (v.has_parameter()) {
        v.t = std::move(t);
    }
    return v;
}

PolyMatrix4 model_matrix_symbolic(VariableKind kind) {
    const Polynomial t = Polynomial::variable(Var::T);
    const Rational half = make_rational(1, 2);
    const Rational quarter = make_rational(1, 4);
    switch (kind) {
        case VariableKind::M1:
            return pi_ii(1);
        case VariableKind::M2:
            return (pi_ii(1) + pi_ii(2)) * half;
        case VariableKind::M3:
            return (pi_ii(2) + pi_ii(3) + pi_ii(4)) * make_rational(1, 3);
        case VariableKind::M4:
            return (pi_ii(1) + pi_ii(2) + pi_ii(3) + pi_ii(4)) * quarter;
        case VariableKind::N3:
            return pi_ii(2) + pi_ii(3) + pi_ii(4);
        case VariableKind::Wt:
            return (pi_ii(1).scaled(Polynomial(1) + t) + pi_ii(2).scaled(Polynomial(1) - t)) * half;
        case VariableKind::Vt:
            return ((pi_ii(1) + pi_ii(2)).scaled(Polynomial(1) + t) +
                    (pi_ii(3) + pi_ii(4)).scaled(Polynomial(1) - t)) *
                   quarter;
    }
    throw std::logic_error("unhandled variable kind");
}

PolyMatrix4 model_matrix(const VariableSpec &v) {
    require_parameter(v);
    PolyMatrix4 m = model_matrix_symbolic(v.kind);
    return v.has_parameter() ? m.substitute_t(*v.t) : m;
}

unsigned default_moment_cap(VariableKind kind) {
    return (kind == VariableKind::N3 || kind == VariableKind::M3) ? 9 : 12;
}

std::vector<Polynomial> exact_moments(const VariableSpec &v, unsigned max_k, unsigned cap) {
    if (cap == 0) {
        cap = default_moment_cap(v.kind);
    }
    if (max_k > cap) {
        throw std::out_of_range("moment order " + std::to_string(max_k) + " exceeds the cap " +
                                std::to_string(cap) + " for " + v.name());
    }
    PolyMatrix4 m = model_matrix_symbolic(v.kind);
    if (v.has_parameter() && v.t) {
        m = m.substitute_t(*v.t);
    }
    std::vector<Polynomial> out;
    PolyMatrix4 power = m;
    const Rational quarter = make_rational(1, 4);
    for (unsigned k = 1; k <= max_k; ++k) {
        out.push_back(integrate_poly(power.trace()) * quarter);
        if (k < max_k) {
            power = power * m;
        }
    }
    return out;
}

Rational exact_moment(const VariableSpec &v, unsigned k, unsigned cap) {
    require_parameter(v);
    if (k == 0) {
        return 1;
    }
    return exact_moments(v, k, cap).back().constant_value();
}

Rational m3_comparison_moment(unsigned k) {
    if (k == 0) {
        return 1;
    }
    Polynomial abc = Polynomial::variable(Var::A).pow(2) + Polynomial::variable(Var::B).pow(2) +
                     Polynomial::variable(Var::C).pow(2);
    return make_rational(3, 4) * integrate_constant(abc.pow(k));
}

Rational SpectralLaw::moment(unsigned k) const {
    Rational total = 0;
    for (const auto &atom : atoms) {
        total += atom.weight * pow(atom.location, k);
    }
    switch (continuous) {
        case ContinuousPart::None:
            break;
        case ContinuousPart::Lebesgue01:
            total += continuous_weight * make_rational(1, k + 1);
            break;
        case ContinuousPart::FreePoisson1: {
            Rational c(catalan(k));
            Integer four_k = 1;
            mpz_mul_2exp(four_k.get_mpz_t(), four_k.get_mpz_t(), 2 * k);
            total += continuous_weight * c / Rational(four_k);
            break;
        }
        case ContinuousPart::Numeric:
            throw std::logic_error("exact moments are unavailable for a numeric density");
    }
    return total;
}

double SpectralLaw::density(double x) const {
    if (x <= 0 || x >= 1) {
        return 0;
    }
    switch (continuous) {
        case ContinuousPart::Lebesgue01:
            return to_double(continuous_weight);
        case ContinuousPart::FreePoisson1:
            return to_double(continuous_weight) * 2 / std::numbers::pi * std::sqrt(1 / x - 1);
        default:
            return 0;
    }
}

Rational SpectralLaw::total_mass() const {
    Rational total = continuous_weight;
    for (const auto &atom : atoms) {
        total += atom.weight;
    }
    return total;
}

SpectralLaw averaged_law(int s) {
    SpectralLaw law;
    switch (s) {
        case 1:
            law.atoms = {{0, make_rational(3, 4)}, {1, make_rational(1, 4)}};
            break;
        case 2:
            law.atoms = {{0, make_rational(1, 2)}};
            law.continuous = ContinuousPart::Lebesgue01;
            law.continuous_weight = make_rational(1, 2);
            break;
        case 4:
            law.continuous = ContinuousPart::FreePoisson1;
            law.continuous_weight = 1;
            break;
        case 3:
            throw std::invalid_argument(
                "no closed form is known for the law of M3; only its moments are available");
        default:
            throw std::invalid_argument("s must be 1, 2 or 4");
    }
    return law;
}

std::vector<Polynomial> charpoly(const PolyMatrix4 &m, bool reduce) {
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    constexpr unsigned n = 4;
    std::vector<Polynomial> c(n + 1);
    c[n] = Polynomial(1);
    PolyMatrix4 mk;  // M_0 = 0
    for (unsigned k = 1; k <= n; ++k) {
        mk = m * mk + PolyMatrix4::identity().scaled(c[n - k + 1]);
        c[n - k] = (m * mk).trace() * make_rational(-1, k);
    }
    if (reduce) {
        for (auto &coeff : c) {
            coeff = coeff.reduce_unit_sphere();
        }
    }
    return c;
}

std::vector<Polynomial> charpoly(const VariableSpec &v, bool reduce) {
    PolyMatrix4 m = model_matrix_symbolic(v.kind);
    if (v.has_parameter() && v.t) {
        m = m.substitute_t(*v.t);
    }
    return charpoly(m, reduce);
}

Complex cauchy_closed(const VariableSpec &v, Complex xi) {
    require_off_support(xi);
    switch (v.kind) {
        case VariableKind::M1:
            return 1.0 / xi + 1.0 / (4.0 * (xi * xi - xi));
        case VariableKind::M2:
            return 0.5 * (1.0 / xi - std::log(1.0 - 1.0 / xi));
        case VariableKind::M4:
            return 2.0 * (1.0 - std::sqrt(1.0 - 1.0 / xi));
        case VariableKind::Wt: {
            require_parameter(v);
            double s = 1 - to_double(*v.t) * to_double(*v.t);
            Complex x = s / (xi * xi - xi);
            // arcsinh(sqrt(x)/2)/sqrt(4x + x^2) = h(w) / (2 sqrt(4 + x)),
            // h(w) = asinh(w)/w, w = sqrt(x)/2; h is even in w.
            Complex w = std::sqrt(x) / 2.0;
            Complex f = asinh_over(w) / (2.0 * std::sqrt(4.0 + x));
            return 1.0 / (2.0 * xi) + (1.0 - 2.0 * xi) / (xi - xi * xi) * f;
        }
        case VariableKind::Vt: {
            require_parameter(v);
            double s = 1 - to_double(*v.t) * to_double(*v.t);
            Complex z = (s / 4) / (xi - xi * xi);
            return 0.5 * (2.0 * xi - 1.0) / (xi * xi - xi * xi * xi) / std::sqrt(1.0 - z);
        }
        case VariableKind::M3:
        case VariableKind::N3:
            break;
    }
    throw std::invalid_argument("no closed-form Cauchy transform for " + v.name());
}

Complex cauchy_closed_derivative(const VariableSpec &v, Complex xi) {
    require_off_support(xi);
    switch (v.kind) {
        case VariableKind::M1: {
            Complex q = xi * xi - xi;
            return -1.0 / (xi * xi) - (2.0 * xi - 1.0) / (4.0 * q * q);
        }
        case VariableKind::M2:
            return 0.5 * (-1.0 / (xi * xi) - 1.0 / (xi * xi - xi));
        case VariableKind::M4:
            return -1.0 / (xi * xi * std::sqrt(1.0 - 1.0 / xi));
        case VariableKind::Vt:
            return cauchy_closed(v, xi);
        default:
            break;
    }
    throw std::invalid_argument("no closed-form derivative of the Cauchy transform for " +
                                v.name());
}

FormalSeries g1_series(unsigned order) {
    FormalSeries u = FormalSeries::x(order);
    FormalSeries inv = (FormalSeries::constant(order, 1) - u).inverse();
    return u + u * u * inv * Polynomial(make_rational(1, 4));
}

FormalSeries g2_series(unsigned order) {
    FormalSeries u = FormalSeries::x(order);
    FormalSeries log_term = series_log(FormalSeries::constant(order, 1) - u);
    return (u - log_term) * Polynomial(make_rational(1, 2));
}

FormalSeries g4_series(unsigned order) {
    FormalSeries u = FormalSeries::x(order);
    FormalSeries root = series_sqrt(FormalSeries::constant(order, 1) - u);
    return (FormalSeries::constant(order, 1) - root) * Polynomial(2);
}

FormalSeries xi_derivative(const FormalSeries &g) {
    // d/dxi u^n = -n u^(n+1).
    FormalSeries out(g.order() + 1);
    for (unsigned n = 1; n <= g.order(); ++n) {
        out[n + 1] = g[n] * Rational(-static_cast<long>(n));
    }
    return out;
}

FormalSeries cauchy_series(const VariableSpec &v, unsigned order) {
    const Polynomial s = parameter_s(v);
    const FormalSeries one = FormalSeries::constant(order, 1);
    const FormalSeries u = FormalSeries::x(order);
    const FormalSeries inv = (one - u).inverse();  // 1/(1-u)
    const FormalSeries two_minus_u = FormalSeries::constant(order, 2) - u;
    switch (v.kind) {
        case VariableKind::M1:
            return g1_series(order);
        case VariableKind::M2:
            return g2_series(order);
        case VariableKind::M4:
            return g4_series(order);
        case VariableKind::Wt: {
            // x = s u^2/(1-u), Y = x/4 = w^2 with w = sqrt(x)/2, and
            // G = u/2 + (1/4) u (2-u)/(1-u) h(w) (1 + Y)^(-1/2).
            FormalSeries y = u * u * inv * (s * make_rational(1, 4));
            // h(w) = asinh(w)/w as a series in Y = w^2.
            // Y has valuation 2, so terms of h past Y^(order/2) do not contribute.
            const unsigned half = order / 2;
            FormalSeries asinh_w = series_arcsinh(FormalSeries::x(2 * half + 1)).shifted_down(1);
            FormalSeries h(order);
            for (unsigned n = 0; n <= half; ++n) {
                h[n] = asinh_w[2 * n];
            }
            FormalSeries h_of_y = h.compose(y);
            FormalSeries root_inv = series_sqrt(one + y).inverse();
            FormalSeries pref = u * two_minus_u * inv * Polynomial(make_rational(1, 4));
            return u * Polynomial(make_rational(1, 2)) + pref * h_of_y * root_inv;
        }
        case VariableKind::Vt: {
            // G' = -(1/2) u^2 (2-u)/(1-u) (1 + (s/4) u^2/(1-u))^(-1/2).
            FormalSeries z = u * u * inv * (s * make_rational(1, 4));
            FormalSeries root_inv = series_sqrt(one + z).inverse();
            return u * u * two_minus_u * inv * root_inv * Polynomial(make_rational(-1, 2));
        }
        case VariableKind::M3:
        case VariableKind::N3:
            break;
    }
    throw std::invalid_argument("no closed-form Cauchy transform for " + v.name());
}

FormalSeries block_cauchy_series(const std::function<Polynomial(unsigned q, unsigned p)> &moment,
                            unsigned order) {
    FormalSeries g(order);
    if (order >= 1) {
        g[1] = Polynomial(1);
    }
    for (unsigned p = 0; 1 + 2 * p <= order; ++p) {
        for (unsigned q = 0; 1 + 2 * p + q <= order; ++q) {
            if (p + q == 0) {
                continue;
            }
            Rational c = make_rational(2 * p + q, p + q) * Rational(binomial(p + q, q)) *
                         make_rational(1, 2);
            if (p % 2) {
                c = -c;
            }
            g[1 + 2 * p + q] += moment(q, p) * c;
        }
    }
    return g;
}

Complex cauchy_transform(const VariableSpec &v, Complex xi) {
    if (v.kind == VariableKind::Vt) {
        require_parameter(v);
        return vt_transform(v, xi);
    }
    return cauchy_closed(v, xi);
}

DensityPoint stieltjes_density_at(const VariableSpec &v, double x, const DensityOptions &options) {
    if (v.kind == VariableKind::M3 || v.kind == VariableKind::N3) {
        throw std::invalid_argument("no Cauchy transform available for " + v.name());
    }
    require_parameter(v);
    if (options.eps.empty()) {
        throw std::invalid_argument("empty eps schedule");
    }
    std::vector<double> values;
    for (double eps : options.eps) {
        values.push_back(-cauchy_transform(v, Complex(x, eps)).imag() / std::numbers::pi);
    }
    return extrapolate(x, options.eps, values, options.tolerance);
}

std::vector<DensityPoint> stieltjes_density(const VariableSpec &v, double x_min, double x_max,
                                            unsigned n, const DensityOptions &options) {
    if (n == 0 || !(x_min < x_max) || x_min <= 0 || x_max >= 1) {
        throw std::invalid_argument("density grid must satisfy 0 < x_min < x_max < 1 and n >= 1");
    }
    std::vector<DensityPoint> out;
    for (unsigned i = 0; i < n; ++i) {
        double x = n == 1 ? x_min : x_min + (x_max - x_min) * i / (n - 1);
        out.push_back(stieltjes_density_at(v, x, options));
    }
    return out;
}

DensityPoint atom_mass(const VariableSpec &v, double x0, const DensityOptions &options) {
    require_parameter(v);
    std::vector<double> values;
    for (double eta : options.eps) {
        Complex xi(x0, eta);
        values.push_back((Complex(0, eta) * cauchy_transform(v, xi)).real());
    }
    return extrapolate(x0, options.eps, values, options.tolerance);
}

bool jacobi_eigenvalues(std::array<double, 16> m, std::array<double, 4> &out, double tolerance,
                        unsigned max_sweeps) {
    auto at = [&](size_t r, size_t c) -> double & { return m[4 * r + c]; };
    double scale = 0;
    for (double x : m) {
        scale += x * x;
    }
    scale = std::max(1.0, std::sqrt(scale));
    for (unsigned sweep = 0; sweep <= max_sweeps; ++sweep) {
        double off = 0;
        for (size_t p = 0; p < 4; ++p) {
            for (size_t q = p + 1; q < 4; ++q) {
                off += at(p, q) * at(p, q);
            }
        }
        if (std::sqrt(off) <= tolerance * scale) {
            for (size_t i = 0; i < 4; ++i) {
                out[i] = at(i, i);
            }
            std::sort(out.begin(), out.end());
            return true;
        }
        if (sweep == max_sweeps) {
            break;
        }
        for (size_t p = 0; p < 4; ++p) {
            for (size_t q = p + 1; q < 4; ++q) {
                double apq = at(p, q);
                if (apq == 0) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (size_t k = 0; k < 4; ++k) {
                    double akp = at(k, p);
                    double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (size_t k = 0; k < 4; ++k) {
                    double apk = at(p, k);
                    double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    return false;
}

McLawResult mc_law(const VariableSpec &v, const McLawOptions &options) {
    if (options.samples < 1) {
        throw std::invalid_argument("mc_law needs at least one sample");
    }
    if (options.bins == 0 || !(options.hist_min < options.hist_max)) {
        throw std::invalid_argument("histogram needs bins >= 1 and hist_min < hist_max");
    }
    const CompiledMatrix matrix(model_matrix(v));

    struct Shard {
        std::vector<RunningStats> moments;
        std::vector<uint64_t> histogram;
        uint64_t rejected = 0;
        uint64_t below = 0;
        uint64_t above = 0;
        uint64_t zeros = 0;
    };
    const unsigned kmax = options.max_moment;
    const double width = (options.hist_max - options.hist_min) / options.bins;

    auto shards = run_shards<Shard>(
        options.samples, options.seed, std::max(1u, options.threads),
        [&](SphereSampler &sampler, uint64_t count) {
            Shard sh;
            sh.moments.resize(kmax);
            sh.histogram.assign(options.bins, 0);
            std::array<double, 4> eig{};
            for (uint64_t n = 0; n < count; ++n) {
                if (!jacobi_eigenvalues(matrix.evaluate(sampler.sample()), eig)) {
                    ++sh.rejected;
                    continue;
                }
                for (double lambda : eig) {
                    if (std::abs(lambda) < options.zero_threshold) {
                        ++sh.zeros;
                    }
                    double pos = (lambda - options.hist_min) / width;
                    if (pos < 0) {
                        // Round-off just below the range still belongs to bin 0.
                        if (lambda > options.hist_min - options.zero_threshold) {
                            ++sh.histogram[0];
                        } else {
                            ++sh.below;
                        }
                    } else if (pos >= options.bins) {
                        if (lambda < options.hist_max + options.zero_threshold) {
                            ++sh.histogram[options.bins - 1];
                        } else {
                            ++sh.above;
                        }
                    } else {
                        ++sh.histogram[static_cast<size_t>(pos)];
                    }
                }
                double powers[4] = {1, 1, 1, 1};
                for (unsigned k = 0; k < kmax; ++k) {
                    double tr = 0;
                    for (size_t i = 0; i < 4; ++i) {
                        powers[i] *= eig[i];
                        tr += powers[i];
                    }
                    sh.moments[k].add(tr / 4);
                }
            }
            return sh;
        });

    McLawResult result;
    result.samples = options.samples;
    result.seed = options.seed;
    result.moments.resize(kmax);
    result.histogram.assign(options.bins, 0);
    result.hist_min = options.hist_min;
    result.hist_max = options.hist_max;
    uint64_t zeros = 0;
    for (const auto &sh : shards) {
        for (unsigned k = 0; k < kmax; ++k) {
            result.moments[k].merge(sh.moments[k]);
        }
        for (size_t b = 0; b < options.bins; ++b) {
            result.histogram[b] += sh.histogram[b];
        }
        result.rejected += sh.rejected;
        result.eigenvalues_below_range += sh.below;
        result.eigenvalues_above_range += sh.above;
        zeros += sh.zeros;
    }
    uint64_t accepted = options.samples - result.rejected;
    result.zero_fraction = accepted ? static_cast<double>(zeros) / (4.0 * accepted) : 0.0;
    return result;
}

}  // namespace qperm
