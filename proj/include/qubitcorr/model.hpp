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
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qubitcorr {

// Units used throughout: times in microseconds, rates in 1/us (angular rates
// in rad/us), measurement signals dimensionless.

/// Bloch-sphere coordinates (x, y, z) of the effective rotating-frame qubit,
/// rho = (1 + x sx + y sy + z sz) / 2.
template <typename Scalar>
using Bloch = Eigen::Matrix<Scalar, 3, 1>;
using BlochVector = Bloch<double>;

/// Tolerance on |r| <= 1 accepted for initial states and checked after projection.
inline constexpr double kPurityTolerance = 1e-6;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Channel { z, phi };

const char *to_string(Channel c);

/// One linear detector continuously measuring sigma_theta = cos(theta) sz + sin(theta) sx.
struct MeasurementChannel {
    double gamma = 1.0;   ///< ensemble dephasing rate Gamma_i
    double tau_m = 1.0;   ///< measurement (collapse) time tau_i
    double angle = 0.0;   ///< direction in the xz-plane, measured from z

    /// Quantum efficiency 1 / (2 tau Gamma).
    double efficiency() const {
        return 1.0 / (2.0 * tau_m * gamma);
    }
};

/// Decoherence of the effective qubit not related to measurement plus the
/// residual Rabi mismatch. T1 or T2 may be infinite.
struct QubitEnvironment {
    double t1 = kInfinity;
    double t2 = kInfinity;
    double rabi_mismatch = 0.0;

    double relaxation_rate() const {
        return 1.0 / t1;
    }
    double dephasing_rate() const {
        return 1.0 / t2;
    }
    /// Damping of x and z after averaging over the fast rotation, (1/T1 + 1/T2) / 2.
    double gamma() const {
        return 0.5 * (relaxation_rate() + dephasing_rate());
    }
    /// Pure dephasing rate 1/T2 - 1/(2 T1).
    double pure_dephasing_rate() const {
        return dephasing_rate() - 0.5 * relaxation_rate();
    }
};

struct MeasurementSetup {
    MeasurementChannel channel_z;
    MeasurementChannel channel_phi;
    QubitEnvironment environment;

    /// Angle between the two measurement directions.
    double phi() const {
        return channel_phi.angle - channel_z.angle;
    }
    const MeasurementChannel &channel(Channel c) const {
        return c == Channel::z ? channel_z : channel_phi;
    }
};

/// Builds a setup with the z channel at angle 0 and the second channel at phi
/// (normalized into (-pi, pi]). Measurement times are derived from the
/// requested efficiencies.
MeasurementSetup make_setup(
    double gamma_z,
    double gamma_phi,
    double eta_z,
    double eta_phi,
    double phi,
    double rabi_mismatch = 0.0,
    double t1 = kInfinity,
    double t2 = kInfinity);

/// Adds the same angle to both measurement directions.
MeasurementSetup rotated(const MeasurementSetup &setup, double extra_angle);

/// Maps an arbitrary angle into (-pi, pi].
double normalize_angle(double angle);

enum class Scheme { ito, stratonovich };

const char *to_string(Scheme s);
Scheme parse_scheme(const std::string &name);

struct SimulationConfig {
    double dt = 0.004;
    double duration = 5.0;
    std::uint64_t n_traces = 1;
    std::uint64_t master_seed = 0;
    BlochVector initial_state = BlochVector(0.0, 0.0, 1.0);
    Scheme scheme = Scheme::ito;
    bool record_state_path = false;

    /// Number of samples per trace, round(duration / dt).
    std::size_t n_steps() const;
};

struct Violation {
    std::string rule;
    std::string message;
};

/// Checks every invariant of the setup and the simulation configuration.
/// Returns an empty list when all hold.
std::vector<Violation> validate_setup(const MeasurementSetup &setup, const SimulationConfig &config);

/// Non-fatal observations, e.g. a step size that is allowed but coarse
/// (dt times the fastest rate above 0.01).
std::vector<std::string> setup_advisories(const MeasurementSetup &setup, const SimulationConfig &config);

/// Fastest rate of the effective-qubit dynamics: max(Gamma_z, Gamma_phi, |mismatch|, 1/T1, 1/T2).
double fastest_rate(const MeasurementSetup &setup);

/// Small rotation of the relative measurement angle caused by the finite
/// resonator bandwidths of the two channels, (kappa_phi - kappa_z) / (2 Omega_R).
/// Throws Error(invalid_parameter) unless omega_rabi > 0.
double effective_angle_correction(double kappa_z, double kappa_phi, double omega_rabi);

}  // namespace qubitcorr
