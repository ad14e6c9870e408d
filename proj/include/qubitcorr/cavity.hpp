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

#include <complex>
#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "qubitcorr/analytic.hpp"

namespace qubitcorr {

/// Readout resonator seen as a classical field driven by vacuum noise.
struct ResonatorParams {
    double kappa = 1.0;      ///< total damping rate
    double kappa_out = 1.0;  ///< coupling to the amplified output line
    double detuning = 0.0;   ///< resonator frequency in the drive frame

    double kappa_aux() const {
        return kappa - kappa_out;
    }
};

/// Throws invalid_parameter unless kappa > 0 and 0 <= kappa_out <= kappa.
void validate_resonator(const ResonatorParams &params);

/// One-step transition of the field quadratures and of the bin integral of
/// Re F, sampled exactly (the state is a linear Gaussian process).
struct ResonatorPropagator {
    Eigen::Matrix3d transition;
    /// Square root of the per-step noise covariance.
    Eigen::Matrix3d noise_factor;
};

ResonatorPropagator resonator_propagator(const ResonatorParams &params, double dt);

/// Bin averages (1/dt) * integral of Re F over consecutive bins of length
/// dt, where F = -v + sqrt(kappa_out) alpha and the field starts in its
/// stationary state. Requires dt * kappa <= 0.05. Deterministic in seed.
Eigen::VectorXd simulate_output_noise(const ResonatorParams &params, double dt, double duration, std::uint64_t seed);

/// Lagged second moment mean(y_t y_{t+k}) for k = 0..max_lag_index with
/// batch-means standard errors.
CorrelatorCurve lagged_autocorrelation(
    const Eigen::VectorXd &samples, double dt, Eigen::Index max_lag_index, Eigen::Index n_batches = 100);

/// The two field-noise contributions (K2, K3) to the Re F correlator at tau > 0.
std::pair<double, double> analytic_noise_terms(const ResonatorParams &params, double tau);

/// Stationary resonator fields for the two effective-qubit states.
std::pair<std::complex<double>, std::complex<double>> steady_state_fields(
    double chi, double eps, double omega_rabi, double kappa, double detuning);

/// Ensemble dephasing rate (kappa/2) |alpha_1 - alpha_0|^2.
double dephasing_from_fields(double kappa, std::complex<double> alpha_1, std::complex<double> alpha_0);

}  // namespace qubitcorr
