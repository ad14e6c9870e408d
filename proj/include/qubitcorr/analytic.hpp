// Copyright 2026 The qubitcorr Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "qubitcorr/model.hpp"

namespace qubitcorr {

/// Generator of the ensemble-averaged (x, z) dynamics, d/dt (x, z) = m (x, z),
/// together with the decay rate of y.
struct EvolutionGenerator {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    double gamma_y = 0.0;
};

EvolutionGenerator build_generator(const MeasurementSetup &setup);

/// Decay rates Gamma_+ and Gamma_- of the averaged (x, z) motion. They form a
/// complex-conjugate pair when the discriminant is negative.
struct DecayRates {
    std::complex<double> gamma_plus;
    std::complex<double> gamma_minus;
    double discriminant = 0.0;

    bool is_real() const {
        return discriminant >= 0.0;
    }
};

DecayRates decay_rates(const MeasurementSetup &setup);

/// exp(a) for a real 2x2 matrix, closed form.
///
/// With a = s*I + b, s = tr(a)/2 and q = s^2 - det(a) (so b*b = q*I):
///   exp(a) = e^s [cosh(sqrt q) I + sinh(sqrt q)/sqrt q * b].
/// Negative q switches to cos/sin; small |q| uses the series of both
/// functions, which covers the defective (repeated eigenvalue) case.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> expm2(const Eigen::Matrix<Scalar, 2, 2> &a) {
    using std::abs;
    using std::cos;
    using std::exp;
    using std::sin;
    using std::sqrt;
    const Scalar s = (a(0, 0) + a(1, 1)) / Scalar(2);
    const Scalar det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const Scalar q = s * s - det;
    Eigen::Matrix<Scalar, 2, 2> b = a;
    b(0, 0) -= s;
    b(1, 1) -= s;

    if (q >= Scalar(1e-4)) {
        // Real eigenvalues s +- r; combine exponentials directly so large
        // arguments cannot overflow cosh/sinh.
        const Scalar r = sqrt(q);
        const Scalar ep = exp(s + r), em = exp(s - r);
        Eigen::Matrix<Scalar, 2, 2> out = ((ep - em) / (Scalar(2) * r)) * b;
        out(0, 0) += (ep + em) / Scalar(2);
        out(1, 1) += (ep + em) / Scalar(2);
        return out;
    }
    Scalar c, sc;  // cosh(sqrt q) and sinh(sqrt q)/sqrt q
    if (abs(q) < Scalar(1e-4)) {
        // Sum_k q^k/(2k)! and Sum_k q^k/(2k+1)!; truncation error < 1e-30.
        Scalar term_c(1), term_s(1);
        c = Scalar(1);
        sc = Scalar(1);
        for (int k = 1; k <= 6; ++k) {
            term_c *= q / Scalar((2 * k - 1) * (2 * k));
            term_s *= q / Scalar((2 * k) * (2 * k + 1));
            c += term_c;
            sc += term_s;
        }
    } else {
        const Scalar r = sqrt(-q);
        c = cos(r);
        sc = sin(r) / r;
    }
    Eigen::Matrix<Scalar, 2, 2> out = sc * b;
    out(0, 0) += c;
    out(1, 1) += c;
    return exp(s) * out;
}

/// Ensemble-averaged state after time t (noise-free Ito equations).
BlochVector propagate_average(const BlochVector &state, double t, const MeasurementSetup &setup);

/// Affine map r -> linear * r + offset of the averaged evolution over a fixed
/// time. The offset is zero for the symmetric evolution modeled here but is
/// kept so the two-branch correlator formula stays general.
struct AverageMap {
    Eigen::Matrix3d linear = Eigen::Matrix3d::Identity();
    BlochVector offset = BlochVector::Zero();

    BlochVector operator()(const BlochVector &r) const {
        return linear * r + offset;
    }
};

AverageMap average_map(double t, const MeasurementSetup &setup);

/// Bloch vector of the +1 eigenstate of the channel observable.
BlochVector eigenstate(const MeasurementSetup &setup, Channel c);

/// Tr[sigma_c rho] for the channel observable.
double expectation(const BlochVector &r, const MeasurementSetup &setup, Channel c);

/// K_ij(tau) for tau >= 0 (tau = 0 is the right limit, without the
/// white-noise spike of the self-correlators). Throws invalid_argument for
/// tau < 0; use K_ij(-tau) = K_ji(tau).
double correlator_closed_form(const MeasurementSetup &setup, Channel i, Channel j, double tau);

/// Collapse-recipe correlator: projective measurement of sigma_i on rho_t1,
/// then averaged evolution from each post-measurement eigenstate.
double correlator_collapse_recipe(
    const MeasurementSetup &setup, Channel i, Channel j, double tau, const BlochVector &rho_t1);

/// Jump rate between the Zeno-pinned states for nearly parallel channels.
double zeno_jump_rate(const MeasurementSetup &setup);

/// K_zphi(tau) - K_phiz(tau).
double antisym_cross_correlator(const MeasurementSetup &setup, double tau);

/// (e^{-Gamma_- tau} - e^{-Gamma_+ tau}) / (Gamma_+ - Gamma_-), evaluated
/// without cancellation; equals tau e^{-Gamma tau} at degeneracy and stays
/// real for complex-conjugate rates.
double rate_difference_template(const DecayRates &rates, double tau);

/// Lag grid 0, dt, 2 dt, ... up to max_lag (inclusive within 1e-9 dt).
Eigen::VectorXd lag_grid(double dt, double max_lag);

/// Correlator values on a lag grid. `standard_error` is empty when unknown.
struct CorrelatorCurve {
    Eigen::VectorXd lags;
    Eigen::VectorXd values;
    Eigen::VectorXd standard_error;
    Channel i = Channel::z;
    Channel j = Channel::z;
    /// True for the antisymmetrized combination K_ij - K_ji.
    bool antisymmetric = false;

    Eigen::Index size() const {
        return lags.size();
    }
    bool has_errors() const {
        return standard_error.size() == values.size() && values.size() > 0;
    }
};

std::string curve_label(const CorrelatorCurve &curve);

CorrelatorCurve analytic_curve(const MeasurementSetup &setup, Channel i, Channel j, const Eigen::VectorXd &lags);
CorrelatorCurve analytic_antisym_curve(const MeasurementSetup &setup, const Eigen::VectorXd &lags);

}  // namespace qubitcorr
