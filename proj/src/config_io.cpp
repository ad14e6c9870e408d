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

#include "qubitcorr/config_io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <set>

#include "qubitcorr/error.hpp"

namespace qubitcorr {

namespace {

using nlohmann::json;

const std::set<std::string> &known_keys() {
    static const std::set<std::string> keys = {
        "gamma_z", "gamma_phi", "tau_z",    "tau_phi",     "phi",    "rabi_mismatch",  "t1",
        "t2",      "dt",        "duration", "n_traces",    "master_seed", "scheme", "initial_state",
    };
    return keys;
}

double number(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw Error(ErrorCode::invalid_parameter, std::string("missing required key '") + key + "'");
    }
    if (!it->is_number()) {
        throw Error(ErrorCode::invalid_parameter, std::string("key '") + key + "' must be a number");
    }
    return it->get<double>();
}

double number_or(const json &doc, const char *key, double fallback) {
    return doc.contains(key) ? number(doc, key) : fallback;
}

double time_or_infinity(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) {
        return kInfinity;
    }
    if (it->is_string()) {
        auto s = it->get<std::string>();
        if (s == "inf" || s == "infinity") {
            return kInfinity;
        }
        throw Error(ErrorCode::invalid_parameter, std::string("key '") + key + "' must be a number or \"inf\"");
    }
    return number(doc, key);
}

json time_to_json(double t) {
    return std::isinf(t) ? json("inf") : json(t);
}

}  // namespace

RunConfig run_config_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw Error(ErrorCode::invalid_parameter, "run configuration must be a JSON object");
    }
    for (const auto &item : doc.items()) {
        if (!known_keys().contains(item.key())) {
            throw Error(ErrorCode::invalid_parameter, "unknown configuration key '" + item.key() + "'");
        }
    }

    RunConfig cfg;
    MeasurementSetup &s = cfg.setup;
    s.channel_z = {number(doc, "gamma_z"), number(doc, "tau_z"), 0.0};
    s.channel_phi = {number(doc, "gamma_phi"), number(doc, "tau_phi"), normalize_angle(number(doc, "phi"))};
    s.environment.rabi_mismatch = number_or(doc, "rabi_mismatch", 0.0);
    s.environment.t1 = time_or_infinity(doc, "t1");
    s.environment.t2 = time_or_infinity(doc, "t2");

    SimulationConfig &sim = cfg.simulation;
    sim.dt = number_or(doc, "dt", sim.dt);
    sim.duration = number_or(doc, "duration", sim.duration);
    if (doc.contains("n_traces")) {
        if (!doc["n_traces"].is_number_unsigned() && !(doc["n_traces"].is_number_integer() && doc["n_traces"].get<std::int64_t>() >= 0)) {
            throw Error(ErrorCode::invalid_parameter, "key 'n_traces' must be a nonnegative integer");
        }
        sim.n_traces = doc["n_traces"].get<std::uint64_t>();
    }
    if (doc.contains("master_seed")) {
        if (!doc["master_seed"].is_number_integer()) {
            throw Error(ErrorCode::invalid_parameter, "key 'master_seed' must be an integer");
        }
        sim.master_seed = doc["master_seed"].get<std::uint64_t>();
    }
    if (doc.contains("scheme")) {
        if (!doc["scheme"].is_string()) {
            throw Error(ErrorCode::invalid_parameter, "key 'scheme' must be a string");
        }
        sim.scheme = parse_scheme(doc["scheme"].get<std::string>());
    }
    if (doc.contains("initial_state")) {
        const json &r = doc["initial_state"];
        if (!r.is_array() || r.size() != 3 || !r[0].is_number() || !r[1].is_number() || !r[2].is_number()) {
            throw Error(ErrorCode::invalid_parameter, "key 'initial_state' must be an array [x, y, z]");
        }
        sim.initial_state = BlochVector(r[0].get<double>(), r[1].get<double>(), r[2].get<double>());
    }
    return cfg;
}

json to_json(const RunConfig &cfg) {
    const MeasurementSetup &s = cfg.setup;
    const SimulationConfig &sim = cfg.simulation;
    json doc;
    doc["gamma_z"] = s.channel_z.gamma;
    doc["gamma_phi"] = s.channel_phi.gamma;
    doc["tau_z"] = s.channel_z.tau_m;
    doc["tau_phi"] = s.channel_phi.tau_m;
    doc["phi"] = s.phi();
    doc["rabi_mismatch"] = s.environment.rabi_mismatch;
    doc["t1"] = time_to_json(s.environment.t1);
    doc["t2"] = time_to_json(s.environment.t2);
    doc["dt"] = sim.dt;
    doc["duration"] = sim.duration;
    doc["n_traces"] = sim.n_traces;
    doc["master_seed"] = sim.master_seed;
    doc["scheme"] = to_string(sim.scheme);
    doc["initial_state"] = std::array<double, 3>{sim.initial_state.x(), sim.initial_state.y(), sim.initial_state.z()};
    return doc;
}

json load_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::invalid_parameter, "malformed JSON in " + path.string() + ": " + e.what());
    }
    return doc;
}

void save_json(const std::filesystem::path &path, const json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << doc.dump(2) << "\n";
    if (!out) {
        throw IoError("write failed on " + path.string());
    }
}

RunConfig load_run_config(const std::filesystem::path &path) {
    return run_config_from_json(load_json(path));
}

void save_run_config(const std::filesystem::path &path, const RunConfig &config) {
    save_json(path, to_json(config));
}

Calibration calibration_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw Error(ErrorCode::invalid_parameter, "calibration must be a JSON object");
    }
    for (const auto &item : doc.items()) {
        static const std::set<std::string> keys = {"response_z", "response_phi", "offset_z", "offset_phi", "diagnostics"};
        if (!keys.contains(item.key())) {
            throw Error(ErrorCode::invalid_parameter, "unknown calibration key '" + item.key() + "'");
        }
    }
    Calibration c;
    c.response_z = number_or(doc, "response_z", c.response_z);
    c.response_phi = number_or(doc, "response_phi", c.response_phi);
    c.offset_z = number_or(doc, "offset_z", c.offset_z);
    c.offset_phi = number_or(doc, "offset_phi", c.offset_phi);
    if (!(c.response_z > 0.0) || !(c.response_phi > 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "calibration responses must be > 0");
    }
    return c;
}

json to_json(const Calibration &c) {
    return {
        {"response_z", c.response_z},
        {"response_phi", c.response_phi},
        {"offset_z", c.offset_z},
        {"offset_phi", c.offset_phi},
    };
}

}  // namespace qubitcorr
