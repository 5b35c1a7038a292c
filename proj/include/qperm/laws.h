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

#ifndef QPERM_LAWS_H
#define QPERM_LAWS_H

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qperm/poly_matrix.h"
#include "qperm/series.h"
#include "qperm/sphere.h"

namespace qperm {

/// Diagonal-coordinate variables of the 4 x 4 quantum permutation group:
/// M_s = (u_11 + ... + u_ss)/s, N3 = 3 M3,
/// w_t = (1+t)/2 u_11 + (1-t)/2 u_22,
/// v_t = (1+t)/4 (u_11 + u_22) + (1-t)/4 (u_33 + u_44).
enum class VariableKind { M1, M2, M3, M4, N3, Wt, Vt };

struct VariableSpec {
    VariableKind kind = VariableKind::M1;
    /// Only meaningful for Wt and Vt. Left empty, exact results stay
    /// polynomials in t.
    std::optional<Rational> t;

    bool has_parameter() const {
        return kind == VariableKind::Wt || kind == VariableKind::Vt;
    }
    std::string name() const;
    /// Accepts m1, m2, m3, m4, n3, wt, vt (any case).
    static VariableSpec parse(std::string_view name, std::optional<Rational> t = std::nullopt);
};

/// Pauli-model matrix of the variable. Wt/Vt without a t value use the
/// symbolic parameter Var::T.
PolyMatrix4 model_matrix_symbolic(VariableKind kind);
/// Throws std::invalid_argument when Wt/Vt lack t.
PolyMatrix4 model_matrix(const VariableSpec &v);

/// Default caps on the moment order: 9 for N3 and M3, 12 otherwise.
unsigned default_moment_cap(VariableKind kind);

/// Moments int tr(X^k), normalized trace, for k = 1..max_k. Entries are
/// polynomials in t (constants unless Wt/Vt with no t given). Throws
/// std::out_of_range above `cap` (0 means the default cap).
std::vector<Polynomial> exact_moments(const VariableSpec &v, unsigned max_k, unsigned cap = 0);
/// Single moment; requires a t value for Wt/Vt.
Rational exact_moment(const VariableSpec &v, unsigned k, unsigned cap = 0);

/// Second moment of (1/4) delta_0 + (3/4) law(a^2+b^2+c^2), the naive
/// guess for the law of M3: (3/4) int (1 - d^2)^2.
Rational m3_comparison_moment(unsigned k);

struct Atom {
    Rational location;
    Rational weight;
    bool operator==(const Atom &) const = default;
};

enum class ContinuousPart { None, Lebesgue01, FreePoisson1, Numeric };

/// A law on [0, 1]: atoms plus a weighted continuous part.
struct SpectralLaw {
    std::vector<Atom> atoms;
    ContinuousPart continuous = ContinuousPart::None;
    Rational continuous_weight = 0;

    /// Exact k-th moment.
    Rational moment(unsigned k) const;
    /// Density of the continuous part (including its weight) at x in (0,1).
    double density(double x) const;
    Rational total_mass() const;
};

/// (1 - s/4) delta_0 + (s/4) mu_s for s in {1, 2, 4}; throws
/// std::invalid_argument for s = 3 (no closed form known) or other s.
SpectralLaw averaged_law(int s);

/// det(y - X) as coefficients of y^0..y^4. With `reduce`, every
/// coefficient is rewritten modulo a^2+b^2+c^2+d^2 = 1.
std::vector<Polynomial> charpoly(const PolyMatrix4 &m, bool reduce = true);
std::vector<Polynomial> charpoly(const VariableSpec &v, bool reduce = true);

using Complex = std::complex<double>;

/// Closed-form Cauchy transforms: G for M1, M2, M4 and Wt; G' for Vt.
/// Throws std::invalid_argument for M3/N3 or missing t, and
/// std::domain_error on the real segment [0, 1].
Complex cauchy_closed(const VariableSpec &v, Complex xi);
/// G' for M1, M2, M4 (derivatives of the closed forms).
Complex cauchy_closed_derivative(const VariableSpec &v, Complex xi);

/// Cauchy transform as a series in u = 1/xi, exact up to u^order. For Vt the
/// series is that of G' = dG/dxi. Coefficients are polynomials in t unless t
/// is fixed.
FormalSeries cauchy_series(const VariableSpec &v, unsigned order);

/// Closed forms of the M1, M2, M4 transforms as series in u.
FormalSeries g1_series(unsigned order);
FormalSeries g2_series(unsigned order);
FormalSeries g4_series(unsigned order);

/// d/dxi of a series in u = 1/xi.
FormalSeries xi_derivative(const FormalSeries &g);

/// Cauchy transform of a random 2 x 2 matrix with characteristic polynomial
/// y^2 - B y + C, given joint moments int B^q C^p via `moment(q, p)`:
/// G = 1/xi + 1/(2 xi) sum_{p+q>0} (-1)^p xi^-(2p+q) (2p+q)/(p+q)
///     binom(p+q, q) int B^q C^p.
FormalSeries block_cauchy_series(const std::function<Polynomial(unsigned q, unsigned p)> &moment,
                            unsigned order);

struct DensityPoint {
    double x = 0;
    double density = 0;
    /// Spread between the full and the reduced extrapolation.
    double error_estimate = 0;
    bool converged = false;
};

struct DensityOptions {
    std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    double tolerance = 1e-6;
};

/// Density by Stieltjes inversion, -Im G(x + i eps)/pi extrapolated to
/// eps -> 0. For Vt, G is rebuilt from G' by integrating down from
/// x + 2i, where G is taken from its series.
std::vector<DensityPoint> stieltjes_density(const VariableSpec &v, double x_min, double x_max,
                                            unsigned n, const DensityOptions &options = {});
DensityPoint stieltjes_density_at(const VariableSpec &v, double x,
                                  const DensityOptions &options = {});

/// Evaluates G (not G') at xi; for Vt via the contour integral.
Complex cauchy_transform(const VariableSpec &v, Complex xi);

/// Mass of an atom at x0, as lim Re(i eta G(x0 + i eta)) for eta -> 0.
DensityPoint atom_mass(const VariableSpec &v, double x0, const DensityOptions &options = {});

/// Eigenvalues of a symmetric 4 x 4 matrix (row-major) by cyclic Jacobi
/// rotations. Returns false if the off-diagonal mass is not below
/// `tolerance` after `max_sweeps`.
bool jacobi_eigenvalues(std::array<double, 16> m, std::array<double, 4> &out,
                        double tolerance = 1e-13, unsigned max_sweeps = 50);

struct McLawOptions {
    uint64_t samples = 1000000;
    uint64_t seed = 42;
    unsigned threads = 1;
    unsigned max_moment = 4;
    unsigned bins = 50;
    double hist_min = 0;
    double hist_max = 1;
    /// |lambda| below this counts as a zero eigenvalue.
    double zero_threshold = 1e-9;
};

struct McLawResult {
    uint64_t samples = 0;
    uint64_t seed = 0;
    uint64_t rejected = 0;
    /// moments[k-1]: per-sample normalized trace of X^k.
    std::vector<RunningStats> moments;
    std::vector<uint64_t> histogram;
    double hist_min = 0;
    double hist_max = 1;
    uint64_t eigenvalues_below_range = 0;
    uint64_t eigenvalues_above_range = 0;
    double zero_fraction = 0;
};

McLawResult mc_law(const VariableSpec &v, const McLawOptions &options);

}  // namespace qperm

#endif
