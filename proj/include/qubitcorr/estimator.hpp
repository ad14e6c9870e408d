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

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qubitcorr/analytic.hpp"
#include "qubitcorr/trajectory.hpp"

namespace qubitcorr {

using TraceEnsemble = std::vector<TraceRecord>;

/// Averaging window over t_1 (samples with t_a <= t_1 < t_b) and the largest lag.
struct EstimatorWindow {
    double t_a = 1.0;
    double t_b = 1.5;
    double max_lag = 2.0;
};

/// Affine detector calibration: raw = (response / 2) * I + offset.
/// Identity is response 2, offset 0.
struct Calibration {
    double response_z = 2.0;
    double response_phi = 2.0;
    double offset_z = 0.0;
    double offset_phi = 0.0;

    static Calibration identity() {
        return {};
    }
    double response(Channel c) const {
        return c == Channel::z ? response_z : response_phi;
    }
    double offset(Channel c) const {
        return c == Channel::z ? offset_z : offset_phi;
    }
};

/// Maps normalized signals to raw detector units (used to build synthetic data).
TraceRecord apply_calibration(const TraceRecord &normalized, const Calibration &calibration);
/// Inverse of apply_calibration.
TraceRecord remove_calibration(const TraceRecord &raw, const Calibration &calibration);

struct EstimatorOptions {
    /// Trace-level bootstrap resamples for the standard errors. Zero selects
    /// the plain standard error of the per-trace contributions.
    std::size_t bootstrap_resamples = 200;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

/// Sample index range [begin, end) of the window and the number of lags.
struct WindowIndices {
    Eigen::Index begin = 0;
    Eigen::Index end = 0;
    Eigen::Index n_lags = 0;
};

/// Resolves the window on the sample grid of `ensemble`; throws invalid_window
/// if it does not fit and empty_ensemble if there are no traces.
WindowIndices resolve_window(const TraceEnsemble &ensemble, const EstimatorWindow &window);

/// Per-trace contributions, one column per trace and one row per lag:
///   c(k, n) = mean over t_1 in window of a_i(t_1) a_j(t_1 + k dt),
/// with a = (raw - offset) / (response / 2). The correlator estimate is the
/// row mean.
Eigen::MatrixXd correlator_contributions(
    const TraceEnsemble &ensemble,
    Channel i,
    Channel j,
    const EstimatorWindow &window,
    const Calibration &calibration = Calibration::identity(),
    unsigned threads = 0);

/// Row means of a contribution matrix with standard errors per `options`.
CorrelatorCurve summarize_contributions(
    const Eigen::VectorXd &lags, const Eigen::MatrixXd &contributions, const EstimatorOptions &options);

CorrelatorCurve estimate_correlator(
    const TraceEnsemble &ensemble,
    Channel i,
    Channel j,
    const EstimatorWindow &window,
    const Calibration &calibration = Calibration::identity(),
    const EstimatorOptions &options = {});

/// K_zphi - K_phiz, with errors resampled on the per-trace difference.
CorrelatorCurve estimate_antisym(
    const TraceEnsemble &ensemble,
    const EstimatorWindow &window,
    const Calibration &calibration = Calibration::identity(),
    const EstimatorOptions &options = {});

/// (K_zphi + K_phiz) / 2.
CorrelatorCurve estimate_symmetrized_cross(
    const TraceEnsemble &ensemble,
    const EstimatorWindow &window,
    const Calibration &calibration = Calibration::identity(),
    const EstimatorOptions &options = {});

/// Statistic evaluated on a multiset of trace indices.
using TraceStatistic = std::function<Eigen::VectorXd(const std::vector<std::size_t> &indices)>;

/// Trace-level bootstrap: standard deviation of `statistic` over resamples of
/// n_traces indices drawn with replacement. Deterministic in `seed`.
Eigen::VectorXd bootstrap_stderr(
    std::size_t n_traces, const TraceStatistic &statistic, std::size_t n_resamples, std::uint64_t seed);

/// Bootstrap of the row means of a (lags x traces) contribution matrix. Uses
/// the same resamples as the generic form, evaluated as one matrix product.
Eigen::VectorXd bootstrap_stderr(const Eigen::MatrixXd &contributions, std::size_t n_resamples, std::uint64_t seed);

/// Resample-count matrix (n_traces x n_resamples): entry (n, b) counts how
/// often trace n appears in resample b.
Eigen::MatrixXd bootstrap_counts(std::size_t n_traces, std::size_t n_resamples, std::uint64_t seed);

struct ResponseFit {
    double response_z = 0.0;
    double response_phi = 0.0;
    double stderr_z = 0.0;
    double stderr_phi = 0.0;
    double residual_norm_z = 0.0;
    double residual_norm_phi = 0.0;
    std::size_t n_points = 0;
};

struct ResponseOptions {
    /// Correction dphi: the nominal angle is setup.phi() - dphi. The initial
    /// state sits half way between the nominal channel directions.
    double angle_correction = 0.0;
    /// Fitted time range; t_end <= t_begin selects the whole trace.
    double t_begin = 0.0;
    double t_end = 0.0;
};

/// Initial Bloch vector of the z0 = +1 group for the calibration geometry.
BlochVector calibration_initial_state(const MeasurementSetup &setup, double angle_correction = 0.0);

/// Fits D_i(t) = <raw_i>_{+} - <raw_i>_{-} to response_i times the averaged
/// channel expectation started from calibration_initial_state. Throws
/// unidentifiable when a response cannot be resolved from zero.
ResponseFit calibrate_response(
    const TraceEnsemble &plus,
    const TraceEnsemble &minus,
    const MeasurementSetup &setup,
    const ResponseOptions &options = {});

struct OffsetEstimate {
    double offset_z = 0.0;
    double offset_phi = 0.0;
    double stderr_z = 0.0;
    double stderr_phi = 0.0;
    /// Standard deviation over time of S(t) = (<raw>_+ + <raw>_-)/2.
    double variation_z = 0.0;
    double variation_phi = 0.0;
};

OffsetEstimate estimate_offsets(const TraceEnsemble &plus, const TraceEnsemble &minus);

/// Per-lag z-scores of an estimate against reference values, restricted to
/// lags in [min_lag, max_lag].
struct CurveComparison {
    Eigen::VectorXd lags;
    Eigen::VectorXd z_scores;
    double max_abs_z = 0.0;
    Eigen::Index n_beyond_3 = 0;
};

CurveComparison compare_curves(
    const CorrelatorCurve &estimate, const Eigen::VectorXd &reference, double min_lag, double max_lag);

}  // namespace qubitcorr
