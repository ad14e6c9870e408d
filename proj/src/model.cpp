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

#include "qubitcorr/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qubitcorr/error.hpp"

namespace qubitcorr {

const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_parameter:
            return "invalid-parameter";
        case ErrorCode::invalid_argument:
            return "invalid-argument";
        case ErrorCode::integration_diverged:
            return "integration-diverged";
        case ErrorCode::invalid_window:
            return "invalid-window";
        case ErrorCode::empty_ensemble:
            return "empty-ensemble";
        case ErrorCode::unidentifiable:
            return "unidentifiable";
        case ErrorCode::invalid_data:
            return "invalid-data";
        case ErrorCode::io:
            return "io";
    }
    return "unknown";
}

IntegrationDiverged::IntegrationDiverged(std::uint64_t step_index, std::uint64_t trace_index, const std::string &detail)
    : Error(
          ErrorCode::integration_diverged,
          "integration diverged at step " + std::to_string(step_index) + " of trace " + std::to_string(trace_index) +
              (detail.empty() ? "" : ": " + detail)),
      step_index_(step_index),
      trace_index_(trace_index) {
}

const char *to_string(Channel c) {
    return c == Channel::z ? "z" : "phi";
}

const char *to_string(Scheme s) {
    return s == Scheme::ito ? "ito" : "stratonovich";
}

Scheme parse_scheme(const std::string &name) {
    if (name == "ito") {
        return Scheme::ito;
    }
    if (name == "stratonovich") {
        return Scheme::stratonovich;
    }
    throw Error(ErrorCode::invalid_parameter, "unknown integration scheme '" + name + "'");
}

double normalize_angle(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::remainder(angle, two_pi);  // [-pi, pi]
    if (a <= -std::numbers::pi) {
        a += two_pi;
    }
    return a;
}

MeasurementSetup make_setup(
    double gamma_z,
    double gamma_phi,
    double eta_z,
    double eta_phi,
    double phi,
    double rabi_mismatch,
    double t1,
    double t2) {
    MeasurementSetup s;
    s.channel_z = {gamma_z, 1.0 / (2.0 * eta_z * gamma_z), 0.0};
    s.channel_phi = {gamma_phi, 1.0 / (2.0 * eta_phi * gamma_phi), normalize_angle(phi)};
    s.environment = {t1, t2, rabi_mismatch};
    return s;
}

MeasurementSetup rotated(const MeasurementSetup &setup, double extra_angle) {
    MeasurementSetup s = setup;
    s.channel_z.angle += extra_angle;
    s.channel_phi.angle += extra_angle;
    return s;
}

std::size_t SimulationConfig::n_steps() const {
    if (!(dt > 0.0) || !(duration > 0.0)) {
        return 0;
    }
    return static_cast<std::size_t>(std::llround(duration / dt));
}

double fastest_rate(const MeasurementSetup &setup) {
    const auto &env = setup.environment;
    return std::max({
        setup.channel_z.gamma,
        setup.channel_phi.gamma,
        std::abs(env.rabi_mismatch),
        env.relaxation_rate(),
        env.dephasing_rate(),
    });
}

namespace {

void check_channel(const char *name, const MeasurementChannel &ch, std::vector<Violation> &out) {
    std::string prefix = std::string("channel_") + name;
    bool rates_ok = true;
    if (!(ch.gamma > 0.0) || !std::isfinite(ch.gamma)) {
        out.push_back({prefix + ".gamma", prefix + ": ensemble dephasing rate must be positive and finite"});
        rates_ok = false;
    }
    if (!(ch.tau_m > 0.0) || !std::isfinite(ch.tau_m)) {
        out.push_back({prefix + ".tau", prefix + ": measurement time must be positive and finite"});
        rates_ok = false;
    }
    if (rates_ok) {
        double eta = ch.efficiency();
        if (!(eta > 0.0 && eta <= 1.0)) {
            std::ostringstream msg;
            msg << prefix << ": efficiency 1/(2 tau gamma) = " << eta << " must lie in (0, 1]";
            out.push_back({prefix + ".efficiency", msg.str()});
        }
    }
    if (!std::isfinite(ch.angle)) {
        out.push_back({prefix + ".angle", prefix + ": angle must be finite"});
    }
}

}  // namespace

std::vector<Violation> validate_setup(const MeasurementSetup &setup, const SimulationConfig &config) {
    std::vector<Violation> out;
    check_channel("z", setup.channel_z, out);
    check_channel("phi", setup.channel_phi, out);

    const auto &env = setup.environment;
    if (!(env.t1 > 0.0)) {
        out.push_back({"t1", "T1 must be positive"});
    }
    if (!(env.t2 > 0.0)) {
        out.push_back({"t2", "T2 must be positive"});
    }
    if (env.t1 > 0.0 && env.t2 > 0.0 && !(env.t2 <= 2.0 * env.t1)) {
        out.push_back({"t2<=2t1", "T2 must not exceed 2 T1 (pure dephasing rate would be negative)"});
    }
    if (!std::isfinite(env.rabi_mismatch)) {
        out.push_back({"rabi_mismatch", "Rabi mismatch must be finite"});
    }

    if (!(config.dt > 0.0) || !std::isfinite(config.dt)) {
        out.push_back({"dt", "dt must be positive and finite"});
    }
    if (!(config.duration > 0.0) || !std::isfinite(config.duration)) {
        out.push_back({"duration", "duration must be positive and finite"});
    } else if (config.dt > 0.0 && config.n_steps() == 0) {
        out.push_back({"duration", "duration is shorter than one step"});
    }
    if (config.dt > 0.0) {
        double stiffness = config.dt * fastest_rate(setup);
        if (stiffness > 0.05) {
            std::ostringstream msg;
            msg << "dt times the fastest rate is " << stiffness << ", above the 0.05 limit";
            out.push_back({"dt*rate<=0.05", msg.str()});
        }
    }
    const BlochVector &r = config.initial_state;
    if (!r.allFinite() || r.norm() > 1.0 + kPurityTolerance) {
        out.push_back({"initial_state", "initial state must lie inside the Bloch ball"});
    }
    return out;
}

std::vector<std::string> setup_advisories(const MeasurementSetup &setup, const SimulationConfig &config) {
    std::vector<std::string> out;
    if (config.dt > 0.0) {
        double stiffness = config.dt * fastest_rate(setup);
        if (stiffness > 0.01 && stiffness <= 0.05) {
            std::ostringstream msg;
            msg << "dt times the fastest rate is " << stiffness << "; discretization bias may be visible";
            out.push_back(msg.str());
        }
    }
    return out;
}

double effective_angle_correction(double kappa_z, double kappa_phi, double omega_rabi) {
    if (!(omega_rabi > 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "Rabi frequency must be positive");
    }
    return (kappa_phi - kappa_z) / (2.0 * omega_rabi);
}

}  // namespace qubitcorr
