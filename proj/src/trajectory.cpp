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

#include "qubitcorr/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "qubitcorr/error.hpp"
#include "qubitcorr/parallel.hpp"
#include "qubitcorr/rng.hpp"

namespace qubitcorr {

NoiseDraw trace_noise(std::uint64_t master_seed, std::uint64_t trace_index, std::uint64_t step_index) {
    auto n = CounterStream(master_seed, StreamDomain::trajectory, trace_index).normal_pair(step_index);
    return {n[0], n[1]};
}

ChannelTerms::ChannelTerms(const MeasurementChannel &ch)
    : cos_a(std::cos(ch.angle)),
      sin_a(std::sin(ch.angle)),
      gamma(ch.gamma),
      inv_sqrt_tau(1.0 / std::sqrt(ch.tau_m)),
      inv_tau(1.0 / ch.tau_m),
      tau(ch.tau_m),
      strat_dephasing(ch.gamma - 0.5 / ch.tau_m) {
}

QubitDynamics::QubitDynamics(const MeasurementSetup &setup)
    : channels_{ChannelTerms(setup.channel_z), ChannelTerms(setup.channel_phi)},
      rabi_(setup.environment.rabi_mismatch),
      gamma_(setup.environment.gamma()),
      gamma_y_(setup.environment.dephasing_rate()) {
}

StepOutcome advance(
    const QubitDynamics &dynamics,
    const BlochVector &state,
    double dt,
    Scheme scheme,
    const NoiseDraw &draw,
    std::uint64_t step_index) {
    BlochVector next;
    if (scheme == Scheme::ito) {
        const double sqrt_dt = std::sqrt(dt);
        next = state + dynamics.ito_drift(state) * dt +
               dynamics.ito_diffusion(state, Channel::z) * (draw.xi_z * sqrt_dt) +
               dynamics.ito_diffusion(state, Channel::phi) * (draw.xi_phi * sqrt_dt);
    } else {
        const ChannelTerms &cz = dynamics.channel(Channel::z);
        const ChannelTerms &cp = dynamics.channel(Channel::phi);
        const double noise_z = std::sqrt(cz.tau / dt) * draw.xi_z;
        const double noise_phi = std::sqrt(cp.tau / dt) * draw.xi_phi;
        BlochVector k1 =
            dynamics.stratonovich_rhs(state, cz.expectation(state) + noise_z, cp.expectation(state) + noise_phi);
        BlochVector predictor = state + k1 * dt;
        BlochVector k2 = dynamics.stratonovich_rhs(
            predictor, cz.expectation(predictor) + noise_z, cp.expectation(predictor) + noise_phi);
        next = state + 0.5 * dt * (k1 + k2);
    }

    if (!next.allFinite()) {
        throw IntegrationDiverged(step_index, 0, "non-finite Bloch vector");
    }
    StepOutcome out;
    out.raw_norm = next.norm();
    if (out.raw_norm > 1.0) {
        next /= out.raw_norm;
        out.projected = true;
    }
    out.state = next;
    return out;
}

BlochVector step(
    const BlochVector &state,
    const MeasurementSetup &setup,
    const SimulationConfig &config,
    const NoiseDraw &draw,
    std::uint64_t step_index) {
    return advance(QubitDynamics(setup), state, config.dt, config.scheme, draw, step_index).state;
}

std::pair<double, double> emit_signals(
    const BlochVector &state_before_step,
    const MeasurementSetup &setup,
    const SimulationConfig &config,
    const NoiseDraw &draw) {
    ChannelTerms cz(setup.channel_z);
    ChannelTerms cp(setup.channel_phi);
    return {
        cz.expectation(state_before_step) + std::sqrt(cz.tau / config.dt) * draw.xi_z,
        cp.expectation(state_before_step) + std::sqrt(cp.tau / config.dt) * draw.xi_phi,
    };
}

TraceRecord simulate_trace(const MeasurementSetup &setup, const SimulationConfig &config, std::uint64_t trace_index) {
    const std::size_t n = config.n_steps();
    const QubitDynamics dynamics(setup);
    const ChannelTerms &cz = dynamics.channel(Channel::z);
    const ChannelTerms &cp = dynamics.channel(Channel::phi);
    const double amp_z = std::sqrt(cz.tau / config.dt);
    const double amp_phi = std::sqrt(cp.tau / config.dt);
    const CounterStream rng(config.master_seed, StreamDomain::trajectory, trace_index);

    TraceRecord rec;
    rec.dt = config.dt;
    rec.seed = trace_index;
    rec.samples.resize(static_cast<Eigen::Index>(n), 2);
    if (config.record_state_path) {
        rec.state_path.resize(static_cast<Eigen::Index>(n + 1), 3);
    }

    BlochVector r = config.initial_state;
    for (std::size_t k = 0; k < n; ++k) {
        auto xi = rng.normal_pair(k);
        NoiseDraw draw{xi[0], xi[1]};
        const auto row = static_cast<Eigen::Index>(k);
        if (config.record_state_path) {
            rec.state_path.row(row) = r.transpose();
        }
        rec.samples(row, 0) = cz.expectation(r) + amp_z * draw.xi_z;
        rec.samples(row, 1) = cp.expectation(r) + amp_phi * draw.xi_phi;
        StepOutcome out;
        try {
            out = advance(dynamics, r, config.dt, config.scheme, draw, k);
        } catch (const IntegrationDiverged &e) {
            throw IntegrationDiverged(k, trace_index, "non-finite Bloch vector");
        }
        rec.projections += out.projected ? 1 : 0;
        r = out.state;
    }
    if (config.record_state_path) {
        rec.state_path.row(static_cast<Eigen::Index>(n)) = r.transpose();
    }
    return rec;
}

void simulate_ensemble(
    const MeasurementSetup &setup,
    const SimulationConfig &config,
    const TraceSink &sink,
    const EnsembleOptions &options) {
    const std::uint64_t total = config.n_traces;
    const unsigned threads = resolve_threads(options.threads);
    const std::uint64_t batch = std::max<std::uint64_t>(64, 16ull * threads);

    std::vector<TraceRecord> buffer;
    for (std::uint64_t start = 0; start < total; start += batch) {
        const std::uint64_t count = std::min(batch, total - start);
        buffer.assign(count, TraceRecord{});
        parallel_for(0, count, threads, [&](std::size_t k) {
            buffer[k] = simulate_trace(setup, config, start + k);
        });
        for (auto &rec : buffer) {
            sink(std::move(rec));
        }
        if (options.progress) {
            options.progress(start + count, total);
        }
    }
}

std::vector<TraceRecord> simulate_ensemble(
    const MeasurementSetup &setup, const SimulationConfig &config, const EnsembleOptions &options) {
    std::vector<TraceRecord> out;
    out.reserve(config.n_traces);
    simulate_ensemble(setup, config, [&](TraceRecord &&rec) { out.push_back(std::move(rec)); }, options);
    return out;
}

}  // namespace qubitcorr
