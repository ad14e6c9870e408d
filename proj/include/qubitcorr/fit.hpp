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

#include <cstddef>
#include <limits>
#include <string>

#include <json.hpp>

#include "qubitcorr/analytic.hpp"

namespace qubitcorr {

struct FitResult {
    std::string parameter;
    double value = 0.0;
    double standard_error = 0.0;
    double residual_norm = 0.0;
    std::size_t n_points = 0;
    /// Fixed-point iterations used (rabi fit with refined rates only).
    int iterations = 0;
};

nlohmann::json to_json(const FitResult &fit);

/// Inclusive lag range. A NaN lower bound selects the first positive lag.
struct LagRange {
    double min = std::numeric_limits<double>::quiet_NaN();
    double max = 2.5;
};

struct RabiFitOptions {
    LagRange lags;
    /// Recompute Gamma_+- from the current estimate of the mismatch and refit
    /// until the estimate stops changing. Off by default: the rates then
    /// come from the setup with zero mismatch and the fit is a single
    /// linear solve.
    bool refine_rates = false;
    int max_iterations = 50;
    double tolerance = 1e-13;
};

/// Fits K_zphi - K_phiz = 2 w sin(phi) T(tau), with T the rate-difference
/// template of the decay rates, for the residual Rabi frequency w.
/// Weighted by 1/stderr^2 when the curve carries errors, otherwise unit
/// weights with a residual-based error.
FitResult fit_rabi_mismatch(
    const CorrelatorCurve &antisym_curve, const MeasurementSetup &setup, const RabiFitOptions &options = {});

/// Least-squares slope of log K versus tau; returns the decay rate.
FitResult fit_decay_rate(const CorrelatorCurve &curve, const LagRange &lags);

}  // namespace qubitcorr
