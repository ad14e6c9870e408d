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
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qubitcorr/model.hpp"

namespace qubitcorr {

/// Standard-normal variates driving one step, one per channel. The same draw
/// feeds both the state update and the emitted signal noise of that step.
struct NoiseDraw {
    double xi_z = 0.0;
    double xi_phi = 0.0;
};

/// Noise draw of step `step_index` of trace `trace_index`.
NoiseDraw trace_noise(std::uint64_t master_seed, std::uint64_t trace_index, std::uint64_t step_index);

/// Per-channel quantities precomputed from a MeasurementSetup so the
/// integrator does not re-evaluate trigonometric functions every step.
struct ChannelTerms {
    double cos_a = 1.0;
    double sin_a = 0.0;
    double gamma = 0.0;
    double inv_sqrt_tau = 0.0;
    double inv_tau = 0.0;
    double tau = 0.0;
    /// Extra individual-trace dephasing of the Stratonovich form, Gamma - 1/(2 tau).
    double strat_dephasing = 0.0;

    explicit ChannelTerms(const MeasurementChannel &ch);
    ChannelTerms() = default;

    template <typename Scalar>
    Scalar expectation(const Bloch<Scalar> &r) const {
        return r.z() * Scalar(cos_a) + r.x() * Scalar(sin_a);
    }
};

/// Bloch-vector dynamics of the effective qubit under simultaneous
/// measurement of two channels, Rabi mismatch and averaged T1/T2 decoherence.
///
/// Each channel is treated in its own rotated basis, where it measures sz
/// along the rotated z axis; terms are rotated back and summed.
class QubitDynamics {
   public:
    explicit QubitDynamics(const MeasurementSetup &setup);

    /// Deterministic part of the Ito equations (all noises set to zero).
    template <typename Scalar>
    Bloch<Scalar> ito_drift(const Bloch<Scalar> &r) const {
        Bloch<Scalar> out = environment_terms(r);
        for (const ChannelTerms &ch : channels_) {
            const Scalar c(ch.cos_a), s(ch.sin_a), g(ch.gamma);
            const Scalar x_rot = r.x() * c - r.z() * s;
            out.x() -= g * c * x_rot;
            out.y() -= g * r.y();
            out.z() += g * s * x_rot;
        }
        return out;
    }

    /// Coefficient vector multiplying the channel noise in the Ito equations.
    template <typename Scalar>
    Bloch<Scalar> ito_diffusion(const Bloch<Scalar> &r, Channel which) const {
        const ChannelTerms &ch = channels_[which == Channel::z ? 0 : 1];
        const Scalar c(ch.cos_a), s(ch.sin_a);
        const Scalar x_rot = r.x() * c - r.z() * s;
        const Scalar z_rot = r.z() * c + r.x() * s;
        // sz-measurement backaction (-x z, -y z, 1 - z^2) in the rotated basis.
        const Scalar bx = -x_rot * z_rot;
        const Scalar by = -r.y() * z_rot;
        const Scalar bz = Scalar(1) - z_rot * z_rot;
        return Scalar(ch.inv_sqrt_tau) * Bloch<Scalar>(bx * c + bz * s, by, bz * c - bx * s);
    }

    /// Right-hand side of the Stratonovich form given the two signal values.
    template <typename Scalar>
    Bloch<Scalar> stratonovich_rhs(const Bloch<Scalar> &r, Scalar signal_z, Scalar signal_phi) const {
        Bloch<Scalar> out = environment_terms(r);
        const Scalar signals[2] = {signal_z, signal_phi};
        for (int k = 0; k < 2; ++k) {
            const ChannelTerms &ch = channels_[k];
            const Scalar c(ch.cos_a), s(ch.sin_a);
            const Scalar x_rot = r.x() * c - r.z() * s;
            const Scalar z_rot = r.z() * c + r.x() * s;
            const Scalar kick = Scalar(ch.inv_tau) * signals[k];
            const Scalar dephase(ch.strat_dephasing);
            const Scalar dx_rot = -kick * x_rot * z_rot - dephase * x_rot;
            const Scalar dz_rot = kick * (Scalar(1) - z_rot * z_rot);
            out.x() += dx_rot * c + dz_rot * s;
            out.y() += -kick * r.y() * z_rot - dephase * r.y();
            out.z() += dz_rot * c - dx_rot * s;
        }
        return out;
    }

    const ChannelTerms &channel(Channel c) const {
        return channels_[c == Channel::z ? 0 : 1];
    }

   private:
    template <typename Scalar>
    Bloch<Scalar> environment_terms(const Bloch<Scalar> &r) const {
        const Scalar w(rabi_), g(gamma_), gy(gamma_y_);
        return Bloch<Scalar>(w * r.z() - g * r.x(), -gy * r.y(), -w * r.x() - g * r.z());
    }

    ChannelTerms channels_[2];
    double rabi_ = 0.0;
    double gamma_ = 0.0;
    double gamma_y_ = 0.0;
};

/// Deterministic part of (dx, dy, dz)/dt in the Ito form.
template <typename Scalar = double>
Bloch<Scalar> ito_drift(const Bloch<Scalar> &state, const MeasurementSetup &setup) {
    return QubitDynamics(setup).ito_drift(state);
}

/// Noise coefficient vectors (g_z, g_phi) of the Ito form.
template <typename Scalar = double>
std::pair<Bloch<Scalar>, Bloch<Scalar>> ito_diffusion(const Bloch<Scalar> &state, const MeasurementSetup &setup) {
    QubitDynamics d(setup);
    return {d.ito_diffusion(state, Channel::z), d.ito_diffusion(state, Channel::phi)};
}

struct StepOutcome {
    BlochVector state;       ///< state after the step (projected if needed)
    double raw_norm = 0.0;   ///< |r| before projection
    bool projected = false;  ///< whether |r| > 1 forced a radial projection
};

/// One integration step of length dt: Euler-Maruyama on the Ito form, or a
/// Heun predictor-corrector on the Stratonovich form driven by the sampled
/// signals. A state leaving the Bloch ball is projected radially back onto
/// the unit sphere. Throws IntegrationDiverged on non-finite output.
StepOutcome advance(
    const QubitDynamics &dynamics,
    const BlochVector &state,
    double dt,
    Scheme scheme,
    const NoiseDraw &draw,
    std::uint64_t step_index = 0);

BlochVector step(
    const BlochVector &state,
    const MeasurementSetup &setup,
    const SimulationConfig &config,
    const NoiseDraw &draw,
    std::uint64_t step_index = 0);

/// Output signals over [t, t + dt] given the state at t:
/// I_i = Tr[sigma_i rho] + sqrt(tau_i / dt) * xi_i.
std::pair<double, double> emit_signals(
    const BlochVector &state_before_step,
    const MeasurementSetup &setup,
    const SimulationConfig &config,
    const NoiseDraw &draw);

/// One realization of the two detector records.
struct TraceRecord {
    double dt = 0.0;
    /// Column 0 holds I_z, column 1 holds I_phi; one row per sample.
    Eigen::Matrix<double, Eigen::Dynamic, 2> samples;
    /// RNG stream id of this trace (its index in the ensemble).
    std::uint64_t seed = 0;
    std::uint64_t projections = 0;
    /// Bloch vector at every sample time plus the final state (n_samples + 1
    /// rows), only when SimulationConfig::record_state_path is set.
    Eigen::Matrix<double, Eigen::Dynamic, 3> state_path;

    std::size_t size() const {
        return static_cast<std::size_t>(samples.rows());
    }
};

/// Simulates trace `trace_index`; deterministic in (master_seed, trace_index).
TraceRecord simulate_trace(const MeasurementSetup &setup, const SimulationConfig &config, std::uint64_t trace_index);

using TraceSink = std::function<void(TraceRecord &&)>;

struct EnsembleOptions {
    unsigned threads = 0;  ///< 0 selects resolve_threads()
    std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

/// Simulates config.n_traces traces and hands them to `sink` in index order.
/// Output is independent of the worker count.
void simulate_ensemble(
    const MeasurementSetup &setup,
    const SimulationConfig &config,
    const TraceSink &sink,
    const EnsembleOptions &options = {});

std::vector<TraceRecord> simulate_ensemble(
    const MeasurementSetup &setup, const SimulationConfig &config, const EnsembleOptions &options = {});

}  // namespace qubitcorr
