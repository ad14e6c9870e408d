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

#include "qubitcorr/cavity.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "qubitcorr/error.hpp"
#include "qubitcorr/rng.hpp"

namespace qubitcorr {

void validate_resonator(const ResonatorParams &params) {
    if (!(params.kappa > 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "kappa must be > 0");
    }
    if (!(params.kappa_out >= 0.0) || params.kappa_out > params.kappa) {
        throw Error(ErrorCode::invalid_parameter, "kappa_out must lie in [0, kappa]");
    }
    if (!std::isfinite(params.detuning)) {
        throw Error(ErrorCode::invalid_parameter, "detuning must be finite");
    }
}

ResonatorPropagator resonator_propagator(const ResonatorParams &params, double dt) {
    validate_resonator(params);
    // State (Re alpha, Im alpha, c) with dc = Re F dt. Noise: Re v, Im v,
    // Re v_a, Im v_a, each of intensity 1/4.
    const double half = 0.5 * params.kappa;
    const double so = std::sqrt(params.kappa_out);
    const double sa = std::sqrt(params.kappa_aux());
    Eigen::Matrix3d drift;
    drift << -half, params.detuning, 0.0,  //
        -params.detuning, -half, 0.0,      //
        so, 0.0, 0.0;
    Eigen::Matrix<double, 3, 4> g;
    g << so, 0.0, sa, 0.0,  //
        0.0, so, 0.0, sa,   //
        -1.0, 0.0, 0.0, 0.0;
    const Eigen::Matrix3d qc = 0.25 * g * g.transpose();

    // Van Loan: exp([[-A, Q], [0, A^T]] dt) = [[., F^{-1} Qd], [0, F^T]].
    Eigen::Matrix<double, 6, 6> vl = Eigen::Matrix<double, 6, 6>::Zero();
    vl.topLeftCorner<3, 3>() = -drift * dt;
    vl.topRightCorner<3, 3>() = qc * dt;
    vl.bottomRightCorner<3, 3>() = drift.transpose() * dt;
    const Eigen::Matrix<double, 6, 6> e = vl.exp();

    ResonatorPropagator p;
    p.transition = e.bottomRightCorner<3, 3>().transpose();
    Eigen::Matrix3d qd = p.transition * e.topRightCorner<3, 3>();
    qd = 0.5 * (qd + qd.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(qd);
    p.noise_factor = eig.eigenvectors() * eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    return p;
}

Eigen::VectorXd simulate_output_noise(const ResonatorParams &params, double dt, double duration, std::uint64_t seed) {
    validate_resonator(params);
    if (!(dt > 0.0) || !(duration >= 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "dt must be > 0 and duration >= 0");
    }
    if (dt * params.kappa > 0.05 + 1e-12) {
        throw Error(ErrorCode::invalid_parameter, "dt * kappa must not exceed 0.05");
    }
    const ResonatorPropagator p = resonator_propagator(params, dt);
    const auto n = static_cast<Eigen::Index>(std::llround(duration / dt));
    const CounterStream rng(seed, StreamDomain::cavity, 0);

    // Stationary field: each quadrature N(0, 1/4), independent.
    auto first = rng.normal_pair(0);
    Eigen::Vector3d state(0.5 * first[0], 0.5 * first[1], 0.0);
    Eigen::VectorXd out(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto pos = 2 * static_cast<std::uint64_t>(k) + 1;
        const auto u = rng.normal_pair(pos);
        const auto w = rng.normal_pair(pos + 1);
        state(2) = 0.0;
        state = p.transition * state + p.noise_factor * Eigen::Vector3d(u[0], u[1], w[0]);
        out(k) = state(2) / dt;
    }
    return out;
}

CorrelatorCurve lagged_autocorrelation(
    const Eigen::VectorXd &samples, double dt, Eigen::Index max_lag_index, Eigen::Index n_batches) {
    const Eigen::Index n = samples.size();
    if (max_lag_index < 0 || n_batches < 2 || n - max_lag_index < n_batches) {
        throw Error(ErrorCode::invalid_argument, "too few samples for the requested lags and batches");
    }
    // Products y_t y_{t+k} for t < n - max_lag_index, split into equal batches.
    const Eigen::Index usable = n - max_lag_index;
    const Eigen::Index per_batch = usable / n_batches;
    Eigen::MatrixXd batch(max_lag_index + 1, n_batches);
    for (Eigen::Index b = 0; b < n_batches; ++b) {
        const Eigen::Index t0 = b * per_batch;
        const auto head = samples.segment(t0, per_batch);
        for (Eigen::Index k = 0; k <= max_lag_index; ++k) {
            batch(k, b) = head.dot(samples.segment(t0 + k, per_batch)) / static_cast<double>(per_batch);
        }
    }
    CorrelatorCurve curve;
    curve.lags = lag_grid(dt, static_cast<double>(max_lag_index) * dt);
    curve.values = batch.rowwise().mean();
    Eigen::MatrixXd centered = batch.colwise() - curve.values;
    curve.standard_error = (centered.rowwise().squaredNorm() / static_cast<double>(n_batches - 1) /
                            static_cast<double>(n_batches))
                               .cwiseSqrt();
    return curve;
}

std::pair<double, double> analytic_noise_terms(const ResonatorParams &params, double tau) {
    if (!(tau > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "tau must be > 0");
    }
    const std::complex<double> kt(params.kappa, 2.0 * params.detuning);
    const double k2 = -0.25 * params.kappa_out * std::exp(-0.5 * kt * tau).real();
    const double k3 = 0.25 * params.kappa_out * std::exp(-0.5 * params.kappa * tau) * std::cos(params.detuning * tau);
    return {k2, k3};
}

std::pair<std::complex<double>, std::complex<double>> steady_state_fields(
    double chi, double eps, double omega_rabi, double kappa, double detuning) {
    if (!(omega_rabi > 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "omega_rabi must be > 0");
    }
    if (!(kappa > 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "kappa must be > 0");
    }
    const std::complex<double> a1 = chi * eps / (omega_rabi * std::complex<double>(kappa, 2.0 * detuning));
    return {a1, -a1};
}

double dephasing_from_fields(double kappa, std::complex<double> alpha_1, std::complex<double> alpha_0) {
    return 0.5 * kappa * std::norm(alpha_1 - alpha_0);
}

}  // namespace qubitcorr
