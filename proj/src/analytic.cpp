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

#include "qubitcorr/analytic.hpp"

#include <cmath>

#include "qubitcorr/error.hpp"

namespace qubitcorr {

namespace {

// sinh(sqrt(q)) / sqrt(q) for any real q.
double sinhc_sqrt(double q) {
    if (std::abs(q) < 1e-4) {
        double term = 1.0, sum = 1.0;
        for (int k = 1; k <= 6; ++k) {
            term *= q / static_cast<double>((2 * k) * (2 * k + 1));
            sum += term;
        }
        return sum;
    }
    if (q > 0) {
        double r = std::sqrt(q);
        return std::sinh(r) / r;
    }
    double r = std::sqrt(-q);
    return std::sin(r) / r;
}

void check_lag(double tau) {
    if (!(tau >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, "lag must be >= 0 (use K_ij(-tau) = K_ji(tau))");
    }
}

}  // namespace

EvolutionGenerator build_generator(const MeasurementSetup &setup) {
    const double g = setup.environment.gamma();
    const double w = setup.environment.rabi_mismatch;
    EvolutionGenerator gen;
    gen.m << -g, w, -w, -g;
    for (const MeasurementChannel *ch : {&setup.channel_z, &setup.channel_phi}) {
        const double c = std::cos(ch->angle), s = std::sin(ch->angle);
        // Projector onto the (x, z) direction (cos a, -sin a) transverse to the channel axis.
        Eigen::Matrix2d p;
        p << c * c, -s * c, -s * c, s * s;
        gen.m -= ch->gamma * p;
    }
    gen.gamma_y = setup.channel_z.gamma + setup.channel_phi.gamma + setup.environment.dephasing_rate();
    return gen;
}

DecayRates decay_rates(const MeasurementSetup &setup) {
    const double gz = setup.channel_z.gamma, gp = setup.channel_phi.gamma;
    const double phi = setup.phi();
    const double w = setup.environment.rabi_mismatch;
    DecayRates r;
    r.discriminant = gz * gz + gp * gp + 2.0 * gz * gp * std::cos(2.0 * phi) - 4.0 * w * w;
    const std::complex<double> root = std::sqrt(std::complex<double>(r.discriminant, 0.0));
    const double base = 0.5 * (gz + gp) + setup.environment.gamma();
    r.gamma_plus = base + 0.5 * root;
    r.gamma_minus = base - 0.5 * root;
    return r;
}

AverageMap average_map(double t, const MeasurementSetup &setup) {
    const EvolutionGenerator gen = build_generator(setup);
    const Eigen::Matrix2d e = expm2<double>(gen.m * t);
    AverageMap map;
    map.linear.setZero();
    // (x, z) block lives at indices {0, 2}; y decays separately.
    map.linear(0, 0) = e(0, 0);
    map.linear(0, 2) = e(0, 1);
    map.linear(2, 0) = e(1, 0);
    map.linear(2, 2) = e(1, 1);
    map.linear(1, 1) = std::exp(-gen.gamma_y * t);
    return map;
}

BlochVector propagate_average(const BlochVector &state, double t, const MeasurementSetup &setup) {
    check_lag(t);
    return average_map(t, setup)(state);
}

BlochVector eigenstate(const MeasurementSetup &setup, Channel c) {
    const double a = setup.channel(c).angle;
    return BlochVector(std::sin(a), 0.0, std::cos(a));
}

double expectation(const BlochVector &r, const MeasurementSetup &setup, Channel c) {
    const double a = setup.channel(c).angle;
    return r.z() * std::cos(a) + r.x() * std::sin(a);
}

double correlator_closed_form(const MeasurementSetup &setup, Channel i, Channel j, double tau) {
    check_lag(tau);
    return expectation(average_map(tau, setup)(eigenstate(setup, i)), setup, j);
}

double correlator_collapse_recipe(
    const MeasurementSetup &setup, Channel i, Channel j, double tau, const BlochVector &rho_t1) {
    check_lag(tau);
    const AverageMap map = average_map(tau, setup);
    const BlochVector up = eigenstate(setup, i);
    const double s = expectation(rho_t1, setup, i);
    const double after_up = expectation(map(up), setup, j);
    const double after_down = expectation(map(-up), setup, j);
    return 0.5 * (1.0 + s) * after_up - 0.5 * (1.0 - s) * after_down;
}

double zeno_jump_rate(const MeasurementSetup &setup) {
    const double gz = setup.channel_z.gamma, gp = setup.channel_phi.gamma;
    const double phi = setup.phi();
    const double w = setup.environment.rabi_mismatch;
    return (phi * phi * gz * gp + w * w) / (2.0 * (gz + gp)) +
           0.25 * (setup.environment.relaxation_rate() + setup.environment.dephasing_rate());
}

double antisym_cross_correlator(const MeasurementSetup &setup, double tau) {
    check_lag(tau);
    const AverageMap map = average_map(tau, setup);
    return expectation(map(eigenstate(setup, Channel::z)), setup, Channel::phi) -
           expectation(map(eigenstate(setup, Channel::phi)), setup, Channel::z);
}

double rate_difference_template(const DecayRates &rates, double tau) {
    const double mean = 0.5 * (rates.gamma_plus + rates.gamma_minus).real();
    // (Gamma_+ - Gamma_-)^2 / 4 = discriminant / 4.
    const double q = 0.25 * rates.discriminant * tau * tau;
    if (q >= 1e-4) {
        const double gp = rates.gamma_plus.real(), gm = rates.gamma_minus.real();
        return (std::exp(-gm * tau) - std::exp(-gp * tau)) / (gp - gm);
    }
    return tau * std::exp(-mean * tau) * sinhc_sqrt(q);
}

Eigen::VectorXd lag_grid(double dt, double max_lag) {
    if (!(dt > 0.0) || !(max_lag >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, "lag grid needs dt > 0 and max_lag >= 0");
    }
    const auto n = static_cast<Eigen::Index>(std::floor(max_lag / dt + 1e-9)) + 1;
    return Eigen::VectorXd::LinSpaced(n, 0.0, static_cast<double>(n - 1)) * dt;
}

std::string curve_label(const CorrelatorCurve &curve) {
    if (curve.antisymmetric) {
        return "K_antisym";
    }
    return std::string("K_") + to_string(curve.i) + to_string(curve.j);
}

CorrelatorCurve analytic_curve(const MeasurementSetup &setup, Channel i, Channel j, const Eigen::VectorXd &lags) {
    CorrelatorCurve out;
    out.lags = lags;
    out.values.resize(lags.size());
    out.i = i;
    out.j = j;
    for (Eigen::Index k = 0; k < lags.size(); ++k) {
        out.values(k) = correlator_closed_form(setup, i, j, lags(k));
    }
    return out;
}

CorrelatorCurve analytic_antisym_curve(const MeasurementSetup &setup, const Eigen::VectorXd &lags) {
    CorrelatorCurve out;
    out.lags = lags;
    out.values.resize(lags.size());
    out.i = Channel::z;
    out.j = Channel::phi;
    out.antisymmetric = true;
    for (Eigen::Index k = 0; k < lags.size(); ++k) {
        out.values(k) = antisym_cross_correlator(setup, lags(k));
    }
    return out;
}

}  // namespace qubitcorr
