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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qubitcorr/estimator.hpp"
#include "qubitcorr/model.hpp"

namespace qubitcorr {

/// A measurement setup together with the simulation settings, as stored in
/// the flat JSON run configuration.
struct RunConfig {
    MeasurementSetup setup;
    SimulationConfig simulation;
};

// Flat JSON layout:
//   gamma_z, gamma_phi, tau_z, tau_phi, phi          required numbers
//   rabi_mismatch (0), t1, t2 (infinite)             optional; t1/t2 accept "inf" or null
//   dt (0.004), duration (5), n_traces (1), master_seed (0),
//   scheme ("ito" | "stratonovich"), initial_state ([0, 0, 1])
// Any other key is rejected with Error(invalid_parameter).
RunConfig run_config_from_json(const nlohmann::json &doc);
nlohmann::json to_json(const RunConfig &config);

RunConfig load_run_config(const std::filesystem::path &path);
void save_run_config(const std::filesystem::path &path, const RunConfig &config);

/// Reads a JSON document; IoError if unreadable, invalid_parameter if malformed.
nlohmann::json load_json(const std::filesystem::path &path);
void save_json(const std::filesystem::path &path, const nlohmann::json &doc);

/// Keys response_z, response_phi, offset_z, offset_phi (missing keys keep the
/// identity values); an optional "diagnostics" object is ignored.
Calibration calibration_from_json(const nlohmann::json &doc);
nlohmann::json to_json(const Calibration &calibration);

}  // namespace qubitcorr
