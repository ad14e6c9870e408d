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

#include "qubitcorr/estimator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qubitcorr/error.hpp"
#include "qubitcorr/parallel.hpp"
#include "qubitcorr/rng.hpp"

namespace qubitcorr {

namespace {

constexpr double kGridSlack = 1e-9;

int column_of(Channel c) {
    return c == Channel::z ? 0 : 1;
}

void check_uniform(const TraceEnsemble &ensemble) {
    if (ensemble.empty()) {
        throw Error(ErrorCode::empty_ensemble, "ensemble has no traces");
    }
    const auto n = ensemble.front().samples.rows();
    const double dt = ensemble.front().dt;
    if (!(dt > 0.0)) {
        throw Error(ErrorCode::invalid_data, "trace sampling interval must be positive");
    }
    for (const auto &t : ensemble) {
        if (t.samples.rows() != n || std::abs(t.dt - dt) > 1e-12 * dt) {
            throw Error(ErrorCode::invalid_data, "traces in an ensemble must share length and dt");
        }
    }
}

// Sample-mean signal of every channel, one row per sample.
Eigen::Matrix<double, Eigen::Dynamic, 2> mean_signal(const TraceEnsemble &ensemble) {
    Eigen::Matrix<double, Eigen::Dynamic, 2> sum = Eigen::Matrix<double, Eigen::Dynamic, 2>::Zero(
        ensemble.front().samples.rows(), 2);
    for (const auto &t : ensemble) {
        sum += t.samples;
    }
    return sum / static_cast<double>(ensemble.size());
}

double sample_variance(const Eigen::VectorXd &v) {
    if (v.size() < 2) {
        return 0.0;
    }
    return (v.array() - v.mean()).square().sum() / static_cast<double>(v.size() - 1);
}

Eigen::VectorXd row_stddev(const Eigen::MatrixXd &m) {
    if (m.cols() < 2) {
        return Eigen::VectorXd::Zero(m.rows());
    }
    Eigen::MatrixXd centered = m.colwise() - m.rowwise().mean();
    return (centered.rowwise().squaredNorm() / static_cast<double>(m.cols() - 1)).cwiseSqrt();
}

}  // namespace

TraceRecord apply_calibration(const TraceRecord &normalized, const Calibration &calibration) {
    TraceRecord out = normalized;
    for (Channel c : {Channel::z, Channel::phi}) {
        auto col = out.samples.col(column_of(c));
        col = (0.5 * calibration.response(c)) * col.array() + calibration.offset(c);
    }
    return out;
}

TraceRecord remove_calibration(const TraceRecord &raw, const Calibration &calibration) {
    TraceRecord out = raw;
    for (Channel c : {Channel::z, Channel::phi}) {
        auto col = out.samples.col(column_of(c));
        col = (col.array() - calibration.offset(c)) / (0.5 * calibration.response(c));
    }
    return out;
}

WindowIndices resolve_window(const TraceEnsemble &ensemble, const EstimatorWindow &window) {
    check_uniform(ensemble);
    const double dt = ensemble.front().dt;
    const auto n = ensemble.front().samples.rows();
    if (!(window.t_a >= 0.0) || !(window.t_b > window.t_a) || !(window.max_lag >= 0.0)) {
        throw Error(ErrorCode::invalid_window, "window needs 0 <= t_a < t_b and max_lag >= 0");
    }
    WindowIndices w;
    w.begin = static_cast<Eigen::Index>(std::ceil(window.t_a / dt - kGridSlack));
    w.end = static_cast<Eigen::Index>(std::ceil(window.t_b / dt - kGridSlack));
    w.n_lags = static_cast<Eigen::Index>(std::floor(window.max_lag / dt + kGridSlack)) + 1;
    if (w.end <= w.begin) {
        throw Error(ErrorCode::invalid_window, "window contains no samples");
    }
    if (w.end + w.n_lags - 1 > n) {
        throw Error(
            ErrorCode::invalid_window, "t_b + max_lag exceeds the trace duration (" + std::to_string(n * dt) + ")");
    }
    return w;
}

Eigen::MatrixXd correlator_contributions(
    const TraceEnsemble &ensemble,
    Channel i,
    Channel j,
    const EstimatorWindow &window,
    const Calibration &calibration,
    unsigned threads) {
    const WindowIndices w = resolve_window(ensemble, window);
    const Eigen::Index len = w.end - w.begin;
    const Eigen::Index span = len + w.n_lags - 1;
    const double scale_i = 2.0 / calibration.response(i);
    const double scale_j = 2.0 / calibration.response(j);
    const double off_i = calibration.offset(i);
    const double off_j = calibration.offset(j);

    Eigen::MatrixXd out(w.n_lags, static_cast<Eigen::Index>(ensemble.size()));
    parallel_for(0, ensemble.size(), resolve_threads(threads), [&](std::size_t n) {
        const auto &s = ensemble[n].samples;
        const Eigen::VectorXd a = (s.col(column_of(i)).segment(w.begin, len).array() - off_i) * scale_i;
        const Eigen::VectorXd b = (s.col(column_of(j)).segment(w.begin, span).array() - off_j) * scale_j;
        auto dst = out.col(static_cast<Eigen::Index>(n));
        for (Eigen::Index k = 0; k < w.n_lags; ++k) {
            dst(k) = a.dot(b.segment(k, len));
        }
        dst /= static_cast<double>(len);
    });
    return out;
}

CorrelatorCurve summarize_contributions(
    const Eigen::VectorXd &lags, const Eigen::MatrixXd &contributions, const EstimatorOptions &options) {
    if (contributions.cols() == 0) {
        throw Error(ErrorCode::empty_ensemble, "ensemble has no traces");
    }
    CorrelatorCurve curve;
    curve.lags = lags;
    curve.values = contributions.rowwise().mean();
    if (options.bootstrap_resamples == 0) {
        curve.standard_error = row_stddev(contributions) / std::sqrt(static_cast<double>(contributions.cols()));
    } else {
        curve.standard_error = bootstrap_stderr(contributions, options.bootstrap_resamples, options.seed);
    }
    return curve;
}

CorrelatorCurve estimate_correlator(
    const TraceEnsemble &ensemble,
    Channel i,
    Channel j,
    const EstimatorWindow &window,
    const Calibration &calibration,
    const EstimatorOptions &options) {
    Eigen::MatrixXd c = correlator_contributions(ensemble, i, j, window, calibration, options.threads);
    CorrelatorCurve curve = summarize_contributions(lag_grid(ensemble.front().dt, window.max_lag), c, options);
    curve.i = i;
    curve.j = j;
    return curve;
}

CorrelatorCurve estimate_antisym(
    const TraceEnsemble &ensemble,
    const EstimatorWindow &window,
    const Calibration &calibration,
    const EstimatorOptions &options) {
    Eigen::MatrixXd c = correlator_contributions(ensemble, Channel::z, Channel::phi, window, calibration, options.threads);
    c -= correlator_contributions(ensemble, Channel::phi, Channel::z, window, calibration, options.threads);
    CorrelatorCurve curve = summarize_contributions(lag_grid(ensemble.front().dt, window.max_lag), c, options);
    curve.i = Channel::z;
    curve.j = Channel::phi;
    curve.antisymmetric = true;
    return curve;
}

CorrelatorCurve estimate_symmetrized_cross(
    const TraceEnsemble &ensemble,
    const EstimatorWindow &window,
    const Calibration &calibration,
    const EstimatorOptions &options) {
    Eigen::MatrixXd c = correlator_contributions(ensemble, Channel::z, Channel::phi, window, calibration, options.threads);
    c += correlator_contributions(ensemble, Channel::phi, Channel::z, window, calibration, options.threads);
    c *= 0.5;
    CorrelatorCurve curve = summarize_contributions(lag_grid(ensemble.front().dt, window.max_lag), c, options);
    curve.i = Channel::z;
    curve.j = Channel::phi;
    return curve;
}

Eigen::MatrixXd bootstrap_counts(std::size_t n_traces, std::size_t n_resamples, std::uint64_t seed) {
    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_traces), static_cast<Eigen::Index>(n_resamples));
    for (std::size_t b = 0; b < n_resamples; ++b) {
        const CounterStream rng(seed, StreamDomain::bootstrap, b);
        for (std::size_t m = 0; m < n_traces; ++m) {
            counts(static_cast<Eigen::Index>(rng.below(m, n_traces)), static_cast<Eigen::Index>(b)) += 1.0;
        }
    }
    return counts;
}

Eigen::VectorXd bootstrap_stderr(
    std::size_t n_traces, const TraceStatistic &statistic, std::size_t n_resamples, std::uint64_t seed) {
    if (n_resamples < 2) {
        throw Error(ErrorCode::invalid_argument, "bootstrap needs at least 2 resamples");
    }
    if (n_traces == 0) {
        throw Error(ErrorCode::empty_ensemble, "ensemble has no traces");
    }
    Eigen::MatrixXd values;
    std::vector<std::size_t> indices(n_traces);
    for (std::size_t b = 0; b < n_resamples; ++b) {
        const CounterStream rng(seed, StreamDomain::bootstrap, b);
        for (std::size_t m = 0; m < n_traces; ++m) {
            indices[m] = rng.below(m, n_traces);
        }
        Eigen::VectorXd v = statistic(indices);
        if (b == 0) {
            values.resize(v.size(), static_cast<Eigen::Index>(n_resamples));
        } else if (v.size() != values.rows()) {
            throw Error(ErrorCode::invalid_argument, "bootstrap statistic changed length between resamples");
        }
        values.col(static_cast<Eigen::Index>(b)) = v;
    }
    return row_stddev(values);
}

Eigen::VectorXd bootstrap_stderr(const Eigen::MatrixXd &contributions, std::size_t n_resamples, std::uint64_t seed) {
    if (n_resamples < 2) {
        throw Error(ErrorCode::invalid_argument, "bootstrap needs at least 2 resamples");
    }
    if (contributions.cols() == 0) {
        throw Error(ErrorCode::empty_ensemble, "ensemble has no traces");
    }
    const auto n = static_cast<std::size_t>(contributions.cols());
    Eigen::MatrixXd means = contributions * bootstrap_counts(n, n_resamples, seed);
    means /= static_cast<double>(n);
    return row_stddev(means);
}

BlochVector calibration_initial_state(const MeasurementSetup &setup, double angle_correction) {
    const double nominal = setup.phi() - angle_correction;
    const double a = setup.channel_z.angle + 0.5 * nominal;
    return BlochVector(std::sin(a), 0.0, std::cos(a));
}

ResponseFit calibrate_response(
    const TraceEnsemble &plus,
    const TraceEnsemble &minus,
    const MeasurementSetup &setup,
    const ResponseOptions &options) {
    check_uniform(plus);
    check_uniform(minus);
    if (plus.front().samples.rows() != minus.front().samples.rows() ||
        std::abs(plus.front().dt - minus.front().dt) > 1e-12 * plus.front().dt) {
        throw Error(ErrorCode::invalid_data, "calibration groups must share length and dt");
    }
    const double dt = plus.front().dt;
    const auto n = plus.front().samples.rows();
    Eigen::Index k0 = 0, k1 = n;
    if (options.t_end > options.t_begin) {
        k0 = std::max<Eigen::Index>(0, static_cast<Eigen::Index>(std::ceil(options.t_begin / dt - kGridSlack)));
        k1 = std::min<Eigen::Index>(n, static_cast<Eigen::Index>(std::ceil(options.t_end / dt - kGridSlack)));
    }
    if (k1 - k0 < 2) {
        throw Error(ErrorCode::invalid_window, "calibration range needs at least 2 samples");
    }

    const Eigen::Matrix<double, Eigen::Dynamic, 2> diff = mean_signal(plus) - mean_signal(minus);
    const BlochVector r0 = calibration_initial_state(setup, options.angle_correction);
    const Eigen::Index m = k1 - k0;
    Eigen::Matrix<double, Eigen::Dynamic, 2> model(m, 2);
    for (Eigen::Index k = 0; k < m; ++k) {
        const BlochVector r = propagate_average(r0, static_cast<double>(k0 + k) * dt, setup);
        model(k, 0) = expectation(r, setup, Channel::z);
        model(k, 1) = expectation(r, setup, Channel::phi);
    }

    ResponseFit fit;
    fit.n_points = static_cast<std::size_t>(m);
    for (int c = 0; c < 2; ++c) {
        const Eigen::VectorXd d = diff.col(c).segment(k0, m);
        const Eigen::VectorXd x = model.col(c);
        const double sxx = x.squaredNorm();
        const char *name = c == 0 ? "z" : "phi";
        if (sxx < 1e-12) {
            throw Error(ErrorCode::unidentifiable, std::string("response_") + name + ": model signal vanishes");
        }
        const double r = d.dot(x) / sxx;
        const Eigen::VectorXd resid = d - r * x;
        const double se = std::sqrt(resid.squaredNorm() / static_cast<double>(m - 1) / sxx);
        if (!(r > 3.0 * se)) {
            throw Error(
                ErrorCode::unidentifiable, std::string("response_") + name + " = " + std::to_string(r) +
                                               " is not resolved from zero (stderr " + std::to_string(se) + ")");
        }
        (c == 0 ? fit.response_z : fit.response_phi) = r;
        (c == 0 ? fit.stderr_z : fit.stderr_phi) = se;
        (c == 0 ? fit.residual_norm_z : fit.residual_norm_phi) = resid.norm();
    }
    return fit;
}

OffsetEstimate estimate_offsets(const TraceEnsemble &plus, const TraceEnsemble &minus) {
    check_uniform(plus);
    check_uniform(minus);
    if (plus.front().samples.rows() != minus.front().samples.rows()) {
        throw Error(ErrorCode::invalid_data, "calibration groups must share length");
    }
    const Eigen::Matrix<double, Eigen::Dynamic, 2> s = 0.5 * (mean_signal(plus) + mean_signal(minus));

    auto trace_means = [](const TraceEnsemble &group, int c) {
        Eigen::VectorXd u(static_cast<Eigen::Index>(group.size()));
        for (std::size_t n = 0; n < group.size(); ++n) {
            u(static_cast<Eigen::Index>(n)) = group[n].samples.col(c).mean();
        }
        return u;
    };

    OffsetEstimate out;
    for (int c = 0; c < 2; ++c) {
        const Eigen::VectorXd up = trace_means(plus, c), um = trace_means(minus, c);
        const double offset = 0.5 * (up.mean() + um.mean());
        const double se = 0.5 * std::sqrt(
                                    sample_variance(up) / static_cast<double>(up.size()) +
                                    sample_variance(um) / static_cast<double>(um.size()));
        const double variation = std::sqrt((s.col(c).array() - s.col(c).mean()).square().mean());
        (c == 0 ? out.offset_z : out.offset_phi) = offset;
        (c == 0 ? out.stderr_z : out.stderr_phi) = se;
        (c == 0 ? out.variation_z : out.variation_phi) = variation;
    }
    return out;
}

CurveComparison compare_curves(
    const CorrelatorCurve &estimate, const Eigen::VectorXd &reference, double min_lag, double max_lag) {
    if (!estimate.has_errors()) {
        throw Error(ErrorCode::invalid_argument, "comparison needs standard errors on the estimate");
    }
    if (reference.size() != estimate.values.size()) {
        throw Error(ErrorCode::invalid_argument, "reference does not match the lag grid");
    }
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < estimate.size(); ++k) {
        const double tau = estimate.lags(k);
        if (tau >= min_lag - 1e-12 && tau <= max_lag + 1e-12) {
            keep.push_back(k);
        }
    }
    CurveComparison out;
    out.lags.resize(static_cast<Eigen::Index>(keep.size()));
    out.z_scores.resize(static_cast<Eigen::Index>(keep.size()));
    for (std::size_t m = 0; m < keep.size(); ++m) {
        const Eigen::Index k = keep[m];
        const double delta = estimate.values(k) - reference(k);
        const double se = estimate.standard_error(k);
        double z = 0.0;
        if (se > 0.0) {
            z = delta / se;
        } else if (delta != 0.0) {
            z = std::copysign(std::numeric_limits<double>::infinity(), delta);
        }
        out.lags(static_cast<Eigen::Index>(m)) = estimate.lags(k);
        out.z_scores(static_cast<Eigen::Index>(m)) = z;
        out.max_abs_z = std::max(out.max_abs_z, std::abs(z));
        out.n_beyond_3 += std::abs(z) > 3.0 ? 1 : 0;
    }
    return out;
}

}  // namespace qubitcorr
