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

#include "qubitcorr/fit.hpp"

#include <cmath>
#include <vector>

#include "qubitcorr/error.hpp"

namespace qubitcorr {

namespace {

std::vector<Eigen::Index> select_lags(const CorrelatorCurve &curve, const LagRange &range) {
    double lo = range.min;
    if (std::isnan(lo)) {
        lo = std::numeric_limits<double>::infinity();
        for (Eigen::Index k = 0; k < curve.size(); ++k) {
            if (curve.lags(k) > 0.0) {
                lo = std::min(lo, curve.lags(k));
            }
        }
    }
    std::vector<Eigen::Index> out;
    for (Eigen::Index k = 0; k < curve.size(); ++k) {
        if (curve.lags(k) >= lo - 1e-12 && curve.lags(k) <= range.max + 1e-12) {
            out.push_back(k);
        }
    }
    if (out.size() < 2) {
        throw Error(ErrorCode::invalid_argument, "fit lag range holds fewer than 2 points");
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const FitResult &fit) {
    return {
        {"parameter", fit.parameter},
        {"value", fit.value},
        {"stderr", fit.standard_error},
        {"residual_norm", fit.residual_norm},
        {"n_points", fit.n_points},
    };
}

FitResult fit_rabi_mismatch(
    const CorrelatorCurve &antisym_curve, const MeasurementSetup &setup, const RabiFitOptions &options) {
    const double sin_phi = std::sin(setup.phi());
    if (std::abs(sin_phi) < 1e-12) {
        throw Error(ErrorCode::unidentifiable, "sin(phi) = 0: the antisymmetrized correlator carries no mismatch signal");
    }
    const std::vector<Eigen::Index> idx = select_lags(antisym_curve, options.lags);
    const auto m = static_cast<Eigen::Index>(idx.size());
    Eigen::VectorXd y(m), w(m);
    bool weighted = antisym_curve.has_errors();
    for (Eigen::Index k = 0; k < m; ++k) {
        y(k) = antisym_curve.values(idx[static_cast<std::size_t>(k)]);
        if (weighted) {
            const double se = antisym_curve.standard_error(idx[static_cast<std::size_t>(k)]);
            weighted = se > 0.0;
            w(k) = weighted ? 1.0 / (se * se) : 1.0;
        }
    }
    if (!weighted) {
        w.setOnes();
    }

    MeasurementSetup trial = setup;
    trial.environment.rabi_mismatch = 0.0;
    FitResult fit;
    fit.parameter = "rabi_mismatch";
    fit.n_points = idx.size();
    Eigen::VectorXd t(m);
    const int rounds = options.refine_rates ? std::max(1, options.max_iterations) : 1;
    for (int round = 0; round < rounds; ++round) {
        const DecayRates rates = decay_rates(trial);
        for (Eigen::Index k = 0; k < m; ++k) {
            t(k) = rate_difference_template(rates, antisym_curve.lags(idx[static_cast<std::size_t>(k)]));
        }
        const double stt = (w.array() * t.array().square()).sum();
        if (!(stt > 0.0)) {
            throw Error(ErrorCode::unidentifiable, "rate-difference template vanishes on the lag range");
        }
        const double amplitude = (w.array() * y.array() * t.array()).sum() / stt;
        const Eigen::VectorXd resid = y - amplitude * t;
        double amp_se;
        if (weighted) {
            amp_se = 1.0 / std::sqrt(stt);
        } else {
            amp_se = m > 1 ? std::sqrt(resid.squaredNorm() / static_cast<double>(m - 1) / stt) : 0.0;
        }
        const double previous = fit.value;
        fit.value = amplitude / (2.0 * sin_phi);
        fit.standard_error = amp_se / std::abs(2.0 * sin_phi);
        fit.residual_norm = resid.norm();
        fit.iterations = round + 1;
        if (round > 0 && std::abs(fit.value - previous) <= options.tolerance * std::max(std::abs(fit.value), 1e-300)) {
            break;
        }
        trial.environment.rabi_mismatch = fit.value;
    }
    return fit;
}

FitResult fit_decay_rate(const CorrelatorCurve &curve, const LagRange &lags) {
    LagRange range = lags;
    if (std::isnan(range.min)) {
        range.min = 0.0;
    }
    const std::vector<Eigen::Index> idx = select_lags(curve, range);
    const auto m = static_cast<Eigen::Index>(idx.size());
    Eigen::VectorXd x(m), y(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const Eigen::Index src = idx[static_cast<std::size_t>(k)];
        if (!(curve.values(src) > 0.0)) {
            throw Error(
                ErrorCode::invalid_data,
                "non-positive correlator value at lag " + std::to_string(curve.lags(src)) + " cannot be log-fitted");
        }
        x(k) = curve.lags(src);
        y(k) = std::log(curve.values(src));
    }
    const double xm = x.mean(), ym = y.mean();
    const double sxx = (x.array() - xm).square().sum();
    if (!(sxx > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "fit lag range has no spread");
    }
    const double slope = ((x.array() - xm) * (y.array() - ym)).sum() / sxx;
    const Eigen::VectorXd resid = (y.array() - ym - slope * (x.array() - xm)).matrix();
    FitResult fit;
    fit.parameter = "decay_rate";
    fit.value = -slope;
    fit.standard_error = m > 2 ? std::sqrt(resid.squaredNorm() / static_cast<double>(m - 2) / sxx) : 0.0;
    fit.residual_norm = resid.norm();
    fit.n_points = idx.size();
    return fit;
}

}  // namespace qubitcorr
