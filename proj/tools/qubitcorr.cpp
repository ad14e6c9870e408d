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

// Command-line front end: simulate, correlate, analytic, fit, cavity-check,
// calibrate. Exit codes: 0 success, 1 validation or usage error, 2 I/O error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qubitcorr/analytic.hpp"
#include "qubitcorr/cavity.hpp"
#include "qubitcorr/config_io.hpp"
#include "qubitcorr/curve_io.hpp"
#include "qubitcorr/error.hpp"
#include "qubitcorr/estimator.hpp"
#include "qubitcorr/fit.hpp"
#include "qubitcorr/parallel.hpp"
#include "qubitcorr/trace_io.hpp"
#include "qubitcorr/trajectory.hpp"

using namespace qubitcorr;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::vector<double> parse_numbers(const std::string &text, std::size_t expected, const std::string &what) {
    std::vector<double> out;
    std::string cell;
    std::istringstream ss(text);
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(cell, &used));
            if (used != cell.size()) {
                throw std::invalid_argument(cell);
            }
        } catch (const std::exception &) {
            throw Error(ErrorCode::invalid_argument, what + ": '" + cell + "' is not a number");
        }
    }
    if (out.size() != expected) {
        throw Error(ErrorCode::invalid_argument, what + " expects " + std::to_string(expected) + " comma-separated values");
    }
    return out;
}

struct PairSpec {
    Channel i;
    Channel j;
};

std::vector<PairSpec> parse_pairs(const std::string &text) {
    std::vector<PairSpec> out;
    std::string cell;
    std::istringstream ss(text);
    while (std::getline(ss, cell, ',')) {
        if (cell == "zz") {
            out.push_back({Channel::z, Channel::z});
        } else if (cell == "zphi") {
            out.push_back({Channel::z, Channel::phi});
        } else if (cell == "phiz") {
            out.push_back({Channel::phi, Channel::z});
        } else if (cell == "phiphi") {
            out.push_back({Channel::phi, Channel::phi});
        } else {
            throw Error(ErrorCode::invalid_argument, "unknown correlator pair '" + cell + "' (use zz, zphi, phiz, phiphi)");
        }
    }
    return out;
}

RunConfig load_validated(const std::string &path) {
    RunConfig cfg = load_run_config(path);
    auto violations = validate_setup(cfg.setup, cfg.simulation);
    if (!violations.empty()) {
        std::string msg = "invalid configuration " + path + ":";
        for (const auto &v : violations) {
            msg += "\n  [" + v.rule + "] " + v.message;
        }
        throw Error(ErrorCode::invalid_parameter, msg);
    }
    for (const auto &w : setup_advisories(cfg.setup, cfg.simulation)) {
        std::cerr << "warning: " << w << "\n";
    }
    return cfg;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string config;
    std::string out;
    std::string csv;
    std::string state_path;
    std::string response;
    std::string offset;
    std::string initial_state;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> n_traces;
    std::string scheme;
};

int run_simulate(const SimulateArgs &args, unsigned threads) {
    RunConfig cfg = load_run_config(args.config);
    if (args.seed) {
        cfg.simulation.master_seed = *args.seed;
    }
    if (args.n_traces) {
        cfg.simulation.n_traces = *args.n_traces;
    }
    if (!args.scheme.empty()) {
        cfg.simulation.scheme = parse_scheme(args.scheme);
    }
    if (!args.initial_state.empty()) {
        auto v = parse_numbers(args.initial_state, 3, "--initial-state");
        cfg.simulation.initial_state = BlochVector(v[0], v[1], v[2]);
    }
    Calibration injected;
    if (!args.response.empty()) {
        auto v = parse_numbers(args.response, 2, "--response");
        injected.response_z = v[0];
        injected.response_phi = v[1];
    }
    if (!args.offset.empty()) {
        auto v = parse_numbers(args.offset, 2, "--offset");
        injected.offset_z = v[0];
        injected.offset_phi = v[1];
    }
    auto violations = validate_setup(cfg.setup, cfg.simulation);
    if (!violations.empty()) {
        for (const auto &v : violations) {
            std::cerr << "error: [" << v.rule << "] " << v.message << "\n";
        }
        return kExitValidation;
    }
    for (const auto &w : setup_advisories(cfg.setup, cfg.simulation)) {
        std::cerr << "warning: " << w << "\n";
    }
    cfg.simulation.record_state_path = !args.state_path.empty();

    const bool identity = injected.response_z == 2.0 && injected.response_phi == 2.0 && injected.offset_z == 0.0 &&
                          injected.offset_phi == 0.0;
    TraceFileHeader header;
    header.n_traces = cfg.simulation.n_traces;
    header.n_samples = cfg.simulation.n_steps();
    header.dt = cfg.simulation.dt;
    header.setup = to_json(cfg);
    if (!identity) {
        header.setup = {{"run", to_json(cfg)}, {"injected_calibration", to_json(injected)}};
    }
    TraceWriter writer(args.out, header);
    std::vector<TraceRecord> for_csv;
    Eigen::MatrixXd path_sum;
    if (cfg.simulation.record_state_path) {
        path_sum = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(header.n_samples + 1), 3);
    }
    std::uint64_t projections = 0;

    EnsembleOptions opts;
    opts.threads = threads;
    simulate_ensemble(
        cfg.setup, cfg.simulation,
        [&](TraceRecord &&rec) {
            projections += rec.projections;
            if (cfg.simulation.record_state_path) {
                path_sum += rec.state_path;
            }
            TraceRecord raw = identity ? std::move(rec) : apply_calibration(rec, injected);
            writer.write(raw);
            if (!args.csv.empty()) {
                raw.state_path.resize(0, 3);
                for_csv.push_back(std::move(raw));
            }
        },
        opts);
    writer.close();
    if (!args.csv.empty()) {
        export_traces_csv(args.csv, for_csv);
    }
    if (cfg.simulation.record_state_path && cfg.simulation.n_traces > 0) {
        path_sum /= static_cast<double>(cfg.simulation.n_traces);
        std::FILE *f = std::fopen(args.state_path.c_str(), "w");
        if (f == nullptr) {
            throw IoError("cannot open " + args.state_path + " for writing");
        }
        std::fputs("t,x,y,z\n", f);
        for (Eigen::Index k = 0; k < path_sum.rows(); ++k) {
            std::fprintf(
                f, "%.17g,%.17g,%.17g,%.17g\n", static_cast<double>(k) * cfg.simulation.dt, path_sum(k, 0),
                path_sum(k, 1), path_sum(k, 2));
        }
        if (std::fclose(f) != 0) {
            throw IoError("write failed on " + args.state_path);
        }
    }
    std::cout << "wrote " << header.n_traces << " traces x " << header.n_samples << " samples to " << args.out
              << " (" << projections << " purity projections)\n";
    return 0;
}

// --------------------------------------------------------------- correlate

struct CorrelateArgs {
    std::string traces;
    std::string window = "1.0,1.5";
    double max_lag = 2.0;
    std::string calibration = "identity";
    std::string out;
    std::string compare;
    std::size_t bootstrap = 200;
    std::uint64_t seed = 0;
    double compare_min_lag = std::nan("");
};

int run_correlate(const CorrelateArgs &args, unsigned threads) {
    auto w = parse_numbers(args.window, 2, "--window");
    EstimatorWindow window{w[0], w[1], args.max_lag};
    Calibration calibration;
    if (args.calibration != "identity") {
        calibration = calibration_from_json(load_json(args.calibration));
    }
    TraceFile file = read_traces(args.traces);
    EstimatorOptions opts;
    opts.bootstrap_resamples = args.bootstrap;
    opts.seed = args.seed;
    opts.threads = threads;

    std::vector<CorrelatorCurve> curves;
    for (auto p : parse_pairs("zz,zphi,phiz,phiphi")) {
        curves.push_back(estimate_correlator(file.traces, p.i, p.j, window, calibration, opts));
    }
    curves.push_back(estimate_antisym(file.traces, window, calibration, opts));
    CurveTable table = make_curve_table(curves);

    if (!args.compare.empty()) {
        CurveTable reference = read_curve_table(args.compare);
        if (reference.lags.size() != table.lags.size() ||
            (reference.lags - table.lags).cwiseAbs().maxCoeff() > 1e-9) {
            throw Error(ErrorCode::invalid_data, "comparison curve uses a different lag grid");
        }
        const double min_lag = std::isnan(args.compare_min_lag) ? file.header.dt : args.compare_min_lag;
        std::cout << "comparison against " << args.compare << " for lags in [" << min_lag << ", " << args.max_lag
                  << "]\n";
        for (const auto &c : curves) {
            const std::string label = curve_label(c);
            if (!reference.has(label)) {
                continue;
            }
            CurveComparison cmp = compare_curves(c, reference.column(label), min_lag, args.max_lag);
            Eigen::VectorXd z = Eigen::VectorXd::Constant(table.lags.size(), std::nan(""));
            for (Eigen::Index k = 0, m = 0; k < table.lags.size() && m < cmp.lags.size(); ++k) {
                if (std::abs(table.lags(k) - cmp.lags(m)) < 1e-12) {
                    z(k) = cmp.z_scores(m++);
                }
            }
            table.set("z_" + label.substr(2), z);
            std::printf(
                "  %-10s max |delta|/stderr = %.3f, %ld of %ld lags beyond 3\n", label.c_str(), cmp.max_abs_z,
                static_cast<long>(cmp.n_beyond_3), static_cast<long>(cmp.z_scores.size()));
        }
    }
    write_curve_table(args.out, table);
    std::cout << "wrote " << table.lags.size() << " lags from " << file.traces.size() << " traces to " << args.out
              << "\n";
    return 0;
}

// ---------------------------------------------------------------- analytic

struct AnalyticArgs {
    std::string config;
    std::string pairs = "zz,zphi,phiz,phiphi";
    double max_lag = 2.0;
    double dt = 0.0;
    bool antisym = true;
    std::string out;
};

int run_analytic(const AnalyticArgs &args) {
    RunConfig cfg = load_validated(args.config);
    const double dt = args.dt > 0.0 ? args.dt : cfg.simulation.dt;
    Eigen::VectorXd lags = lag_grid(dt, args.max_lag);
    std::vector<CorrelatorCurve> curves;
    for (auto p : parse_pairs(args.pairs)) {
        curves.push_back(analytic_curve(cfg.setup, p.i, p.j, lags));
    }
    if (args.antisym) {
        curves.push_back(analytic_antisym_curve(cfg.setup, lags));
    }
    write_curve_table(args.out, make_curve_table(curves));
    DecayRates r = decay_rates(cfg.setup);
    std::printf(
        "Gamma_+ = %.6g%+.6gi, Gamma_- = %.6g%+.6gi per us; wrote %ld lags to %s\n", r.gamma_plus.real(),
        r.gamma_plus.imag(), r.gamma_minus.real(), r.gamma_minus.imag(), static_cast<long>(lags.size()),
        args.out.c_str());
    return 0;
}

// --------------------------------------------------------------------- fit

struct FitArgs {
    std::string curve;
    std::string config;
    std::string out;
    std::string column = "K_zz";
    double lag_min = std::nan("");
    double lag_max = 2.5;
    bool refine = false;
};

int write_fit(const FitResult &fit, const std::string &out) {
    save_json(out, to_json(fit));
    std::printf(
        "%s = %.8g +- %.3g (%zu points, residual norm %.3g)\n", fit.parameter.c_str(), fit.value, fit.standard_error,
        fit.n_points, fit.residual_norm);
    return 0;
}

int run_fit_rabi(const FitArgs &args) {
    RunConfig cfg = load_validated(args.config);
    CorrelatorCurve curve = curve_from_table(read_curve_table(args.curve), "K_antisym");
    RabiFitOptions opts;
    opts.lags = {args.lag_min, args.lag_max};
    opts.refine_rates = args.refine;
    return write_fit(fit_rabi_mismatch(curve, cfg.setup, opts), args.out);
}

int run_fit_decay(const FitArgs &args) {
    CorrelatorCurve curve = curve_from_table(read_curve_table(args.curve), args.column);
    return write_fit(fit_decay_rate(curve, {std::isnan(args.lag_min) ? 0.0 : args.lag_min, args.lag_max}), args.out);
}

// ------------------------------------------------------------ cavity-check

struct CavityArgs {
    ResonatorParams params;
    std::string out;
    double max_lag = 0.0;
    double dt = 0.0;
    double duration = 0.0;
    std::uint64_t seed = 0;
    std::string samples_out;
    std::string correlation_out;
};

int run_cavity(const CavityArgs &args) {
    validate_resonator(args.params);
    const double max_lag = args.max_lag > 0.0 ? args.max_lag : 10.0 / args.params.kappa;
    const double dt = args.dt > 0.0 ? args.dt : 0.05 / args.params.kappa;

    CurveTable table;
    const Eigen::VectorXd grid = lag_grid(dt, max_lag);
    const Eigen::VectorXd lags = grid.tail(grid.size() - 1);
    table.lags = lags;
    Eigen::VectorXd k2(lags.size()), k3(lags.size());
    for (Eigen::Index k = 0; k < lags.size(); ++k) {
        std::tie(k2(k), k3(k)) = analytic_noise_terms(args.params, lags(k));
    }
    table.set("K2", k2);
    table.set("K3", k3);
    table.set("K2+K3", k2 + k3);
    write_curve_table(args.out, table);
    std::printf("max |K2 + K3| = %.3g over %ld lags\n", (k2 + k3).cwiseAbs().maxCoeff(), static_cast<long>(lags.size()));

    if (args.duration > 0.0) {
        Eigen::VectorXd y = simulate_output_noise(args.params, dt, args.duration, args.seed);
        const auto max_k = static_cast<Eigen::Index>(std::floor(max_lag / dt + 1e-9));
        CorrelatorCurve c = lagged_autocorrelation(y, dt, max_k);
        const double expected0 = 0.25 / dt;
        std::printf(
            "lag-0 variance %.6g (expected %.6g, z = %.2f)\n", c.values(0), expected0,
            (c.values(0) - expected0) / c.standard_error(0));
        Eigen::VectorXd zero = Eigen::VectorXd::Zero(c.size());
        zero(0) = expected0;
        CurveComparison cmp = compare_curves(c, zero, dt, max_lag);
        std::printf(
            "lagged correlator: max |K|/stderr = %.3f, %ld of %ld lags beyond 3\n", cmp.max_abs_z,
            static_cast<long>(cmp.n_beyond_3), static_cast<long>(cmp.z_scores.size()));
        if (!args.correlation_out.empty()) {
            CurveTable ct;
            ct.lags = c.lags;
            ct.set("K_ReF", c.values);
            ct.set("err_ReF", c.standard_error);
            write_curve_table(args.correlation_out, ct);
        }
        if (!args.samples_out.empty()) {
            std::FILE *f = std::fopen(args.samples_out.c_str(), "w");
            if (f == nullptr) {
                throw IoError("cannot open " + args.samples_out + " for writing");
            }
            std::fputs("t,ReF\n", f);
            for (Eigen::Index k = 0; k < y.size(); ++k) {
                std::fprintf(f, "%.17g,%.17g\n", static_cast<double>(k) * dt, y(k));
            }
            if (std::fclose(f) != 0) {
                throw IoError("write failed on " + args.samples_out);
            }
        }
    }
    return 0;
}

// --------------------------------------------------------------- calibrate

struct CalibrateArgs {
    std::string plus;
    std::string minus;
    std::string config;
    std::string out;
    double angle_correction = 0.0;
};

int run_calibrate(const CalibrateArgs &args) {
    RunConfig cfg = load_validated(args.config);
    TraceFile plus = read_traces(args.plus);
    TraceFile minus = read_traces(args.minus);
    ResponseOptions ro;
    ro.angle_correction = args.angle_correction;
    ResponseFit rf = calibrate_response(plus.traces, minus.traces, cfg.setup, ro);
    OffsetEstimate oe = estimate_offsets(plus.traces, minus.traces);
    Calibration cal{rf.response_z, rf.response_phi, oe.offset_z, oe.offset_phi};
    nlohmann::json doc = to_json(cal);
    doc["diagnostics"] = {
        {"stderr_response_z", rf.stderr_z},     {"stderr_response_phi", rf.stderr_phi},
        {"residual_norm_z", rf.residual_norm_z}, {"residual_norm_phi", rf.residual_norm_phi},
        {"stderr_offset_z", oe.stderr_z},       {"stderr_offset_phi", oe.stderr_phi},
        {"offset_variation_z", oe.variation_z}, {"offset_variation_phi", oe.variation_phi},
        {"n_points", rf.n_points},
    };
    save_json(args.out, doc);
    std::printf(
        "response_z = %.5g +- %.2g, response_phi = %.5g +- %.2g, offset_z = %.5g +- %.2g, offset_phi = %.5g +- %.2g\n",
        rf.response_z, rf.stderr_z, rf.response_phi, rf.stderr_phi, oe.offset_z, oe.stderr_z, oe.offset_phi,
        oe.stderr_phi);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qubitcorr: simultaneous continuous measurement of two non-commuting qubit observables"};
    app.require_subcommand(1, 1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (default: QUBITCORR_THREADS or hardware concurrency)");

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Simulate an ensemble of measurement records");
    simulate->add_option("--config", sim.config, "Run configuration (JSON)")->required();
    simulate->add_option("--out", sim.out, "Output trace file (QTRC)")->required();
    simulate->add_option("--csv", sim.csv, "Also export traces as CSV");
    simulate->add_option("--state-path", sim.state_path, "Write the ensemble-mean Bloch path (CSV)");
    simulate->add_option("--response", sim.response, "Inject detector responses rz,rphi (identity: 2,2)");
    simulate->add_option("--offset", sim.offset, "Inject detector offsets oz,ophi");
    simulate->add_option("--initial-state", sim.initial_state, "Override initial Bloch vector x,y,z");
    simulate->add_option("--seed", sim.seed, "Override master seed");
    simulate->add_option("--n-traces", sim.n_traces, "Override ensemble size");
    simulate->add_option("--scheme", sim.scheme, "Override integration scheme (ito|stratonovich)");

    CorrelateArgs cor;
    auto *correlate = app.add_subcommand("correlate", "Estimate correlators from a trace file");
    correlate->add_option("--traces", cor.traces, "Input trace file (QTRC)")->required();
    correlate->add_option("--window", cor.window, "Averaging window t_a,t_b in us")->capture_default_str();
    correlate->add_option("--max-lag", cor.max_lag, "Largest lag in us")->capture_default_str();
    correlate->add_option("--calibration", cor.calibration, "Calibration JSON or 'identity'")->capture_default_str();
    correlate->add_option("--out", cor.out, "Output curve CSV")->required();
    correlate->add_option("--compare", cor.compare, "Analytic curve CSV to compare against (adds z_* columns)");
    correlate->add_option("--compare-min-lag", cor.compare_min_lag, "Smallest lag compared (default: dt)");
    correlate->add_option("--bootstrap", cor.bootstrap, "Bootstrap resamples (0: plain standard error)")
        ->capture_default_str();
    correlate->add_option("--seed", cor.seed, "Bootstrap seed")->capture_default_str();

    AnalyticArgs ana;
    auto *analytic = app.add_subcommand("analytic", "Closed-form correlators");
    analytic->add_option("--config", ana.config, "Run configuration (JSON)")->required();
    analytic->add_option("--pairs", ana.pairs, "Comma-separated pairs")->capture_default_str();
    analytic->add_option("--max-lag", ana.max_lag, "Largest lag in us")->capture_default_str();
    analytic->add_option("--dt", ana.dt, "Lag step (default: config dt)");
    analytic->add_flag("!--no-antisym", ana.antisym, "Omit the K_antisym column");
    analytic->add_option("--out", ana.out, "Output curve CSV")->required();

    FitArgs fit_args;
    auto *fit = app.add_subcommand("fit", "Fit parameters to correlator curves");
    fit->require_subcommand(1, 1);
    auto *rabi = fit->add_subcommand("rabi", "Residual Rabi frequency from K_antisym");
    rabi->add_option("--curve", fit_args.curve, "Curve CSV with a K_antisym column")->required();
    rabi->add_option("--config", fit_args.config, "Run configuration (rates and phi)")->required();
    rabi->add_option("--out", fit_args.out, "Output JSON")->required();
    rabi->add_option("--lag-min", fit_args.lag_min, "Smallest lag (default: first positive lag)");
    rabi->add_option("--lag-max", fit_args.lag_max, "Largest lag")->capture_default_str();
    rabi->add_flag("--refine", fit_args.refine, "Iterate the decay rates with the fitted mismatch");
    auto *decay = fit->add_subcommand("decay", "Single-exponential decay rate of one column");
    decay->add_option("--curve", fit_args.curve, "Curve CSV")->required();
    decay->add_option("--column", fit_args.column, "Column to fit")->capture_default_str();
    decay->add_option("--out", fit_args.out, "Output JSON")->required();
    decay->add_option("--lag-min", fit_args.lag_min, "Smallest lag (default 0)");
    decay->add_option("--lag-max", fit_args.lag_max, "Largest lag")->capture_default_str();

    CavityArgs cav;
    auto *cavity = app.add_subcommand("cavity-check", "Resonator output-noise cancellation check");
    cavity->add_option("--kappa", cav.params.kappa, "Total damping rate (rad/us)")->required();
    cavity->add_option("--kappa-out", cav.params.kappa_out, "Output coupling (rad/us)")->required();
    cavity->add_option("--detuning", cav.params.detuning, "Detuning (rad/us)")->capture_default_str();
    cavity->add_option("--out", cav.out, "Output CSV tau,K2,K3,K2+K3")->required();
    cavity->add_option("--max-lag", cav.max_lag, "Largest lag (default 10/kappa)");
    cavity->add_option("--dt", cav.dt, "Sampling step (default 0.05/kappa)");
    cavity->add_option("--duration", cav.duration, "Also simulate Re F for this long (us)");
    cavity->add_option("--seed", cav.seed, "Simulation seed")->capture_default_str();
    cavity->add_option("--samples-out", cav.samples_out, "Write simulated samples t,ReF");
    cavity->add_option("--correlation-out", cav.correlation_out, "Write the simulated lagged correlator");

    CalibrateArgs cal;
    auto *calibrate = app.add_subcommand("calibrate", "Detector responses and offsets from z0 = +-1 groups");
    calibrate->add_option("--plus", cal.plus, "Traces started at z0 = +1")->required();
    calibrate->add_option("--minus", cal.minus, "Traces started at z0 = -1")->required();
    calibrate->add_option("--config", cal.config, "Run configuration")->required();
    calibrate->add_option("--out", cal.out, "Output calibration JSON")->required();
    calibrate->add_option("--angle-correction", cal.angle_correction, "Angle correction dphi (rad)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(sim, threads);
        }
        if (correlate->parsed()) {
            return run_correlate(cor, threads);
        }
        if (analytic->parsed()) {
            return run_analytic(ana);
        }
        if (rabi->parsed()) {
            return run_fit_rabi(fit_args);
        }
        if (decay->parsed()) {
            return run_fit_decay(fit_args);
        }
        if (cavity->parsed()) {
            return run_cavity(cav);
        }
        if (calibrate->parsed()) {
            return run_calibrate(cal);
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error &e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
