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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"
#include "qubitcorr/curve_io.hpp"
#include "qubitcorr/error.hpp"
#include "qubitcorr/trace_io.hpp"

using namespace qubitcorr;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
    auto dir = fs::temp_directory_path() / "qubitcorr_io_test";
    fs::create_directories(dir);
    return dir / name;
}

std::vector<TraceRecord> random_traces(std::mt19937_64 &gen, std::size_t n, Eigen::Index samples) {
    std::normal_distribution<double> nd(0.0, 30.0);
    std::vector<TraceRecord> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k].dt = 0.004;
        out[k].seed = 1000 + k;
        out[k].projections = gen() % 7;
        out[k].samples = Eigen::Matrix<double, Eigen::Dynamic, 2>::NullaryExpr(samples, 2, [&] { return nd(gen); });
    }
    return out;
}

}  // namespace

TEST(qtrc, round_trip_preserves_every_bit) {
    std::mt19937_64 gen(1);
    for (int round = 0; round < 5; ++round) {
        const std::size_t n = gen() % 20;
        const Eigen::Index samples = 1 + static_cast<Eigen::Index>(gen() % 300);
        auto traces = random_traces(gen, n, samples);
        nlohmann::json setup = {{"phi", 1.25}, {"round", round}};
        auto path = scratch("rt.qtrc");
        if (n == 0) {
            TraceWriter w(path, TraceFileHeader{0, static_cast<std::uint64_t>(samples), 0.004, setup});
            w.close();
        } else {
            write_traces(path, traces, setup);
        }
        TraceFile f = read_traces(path);
        ASSERT_EQ(f.traces.size(), n);
        EXPECT_EQ(f.header.n_traces, n);
        EXPECT_EQ(f.header.setup, setup);
        for (std::size_t k = 0; k < n; ++k) {
            EXPECT_EQ(f.traces[k].samples, traces[k].samples);
            EXPECT_EQ(f.traces[k].seed, traces[k].seed);
            EXPECT_EQ(f.traces[k].projections, traces[k].projections);
            EXPECT_EQ(f.traces[k].dt, 0.004);
        }
        TraceFileHeader h = read_trace_header(path);
        EXPECT_EQ(h.n_samples, static_cast<std::uint64_t>(samples));
    }
}

TEST(qtrc, layout_and_damage_detection) {
    std::mt19937_64 gen(2);
    auto traces = random_traces(gen, 3, 10);
    auto path = scratch("layout.qtrc");
    write_traces(path, traces, nlohmann::json::object());
    const std::string setup = nlohmann::json::object().dump();
    const auto expected = 4 + 4 + 8 + 8 + 8 + 4 + setup.size() + 3 * (8 + 8 + 10 * 16);
    EXPECT_EQ(fs::file_size(path), expected);
    {
        std::ifstream in(path, std::ios::binary);
        char magic[4];
        in.read(magic, 4);
        EXPECT_EQ(std::string(magic, 4), "QTRC");
    }

    auto cut = scratch("cut.qtrc");
    fs::copy_file(path, cut, fs::copy_options::overwrite_existing);
    fs::resize_file(cut, expected - 9);
    EXPECT_THROW(read_traces(cut), IoError);

    auto bad = scratch("bad.qtrc");
    {
        std::ofstream(bad, std::ios::binary) << "QTRX and more bytes than a header needs....";
    }
    EXPECT_THROW(read_traces(bad), IoError);
    EXPECT_THROW(read_trace_header(scratch("missing.qtrc")), IoError);
}

TEST(qtrc, writer_enforces_header) {
    auto path = scratch("writer.qtrc");
    std::mt19937_64 gen(3);
    auto traces = random_traces(gen, 2, 5);
    {
        TraceWriter w(path, TraceFileHeader{2, 5, 0.004, {}});
        w.write(traces[0]);
        EXPECT_THROW(w.write(random_traces(gen, 1, 6)[0]), Error);
        EXPECT_THROW(w.close(), IoError);
    }
    {
        TraceWriter w(path, TraceFileHeader{1, 5, 0.004, {}});
        w.write(traces[0]);
        EXPECT_THROW(w.write(traces[1]), Error);
        w.close();
        EXPECT_EQ(w.written(), 1u);
    }
    EXPECT_EQ(read_traces(path).traces.size(), 1u);
}

TEST(trace_csv, export_import) {
    std::mt19937_64 gen(4);
    auto traces = random_traces(gen, 4, 25);
    auto path = scratch("traces.csv");
    export_traces_csv(path, traces);
    {
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        EXPECT_EQ(header, "trace,t,I_z,I_phi");
    }
    auto back = import_traces_csv(path);
    ASSERT_EQ(back.size(), 4u);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(back[k].samples, traces[k].samples);
        EXPECT_EQ(back[k].seed, traces[k].seed);
        EXPECT_NEAR(back[k].dt, 0.004, 1e-15);
    }
    auto broken = scratch("broken.csv");
    {
        std::ofstream(broken) << "trace,t,I_z,I_phi\n0,0,1.0\n";
    }
    EXPECT_THROW(import_traces_csv(broken), IoError);
}

TEST(curve_csv, round_trip) {
    CorrelatorCurve a;
    a.lags = Eigen::VectorXd::LinSpaced(11, 0.0, 1.0);
    a.values = (a.lags.array() * 1.7).sin().matrix();
    a.standard_error = Eigen::VectorXd::Constant(11, 0.0123456789012345);
    a.i = Channel::z;
    a.j = Channel::phi;
    CorrelatorCurve b = a;
    b.antisymmetric = true;
    b.values *= -1.0 / 3.0;
    b.standard_error.resize(0);
    CurveTable t = make_curve_table({a, b});
    EXPECT_TRUE(t.has("K_zphi"));
    EXPECT_TRUE(t.has("err_zphi"));
    EXPECT_TRUE(t.has("K_antisym"));
    EXPECT_FALSE(t.has("err_antisym"));
    auto path = scratch("curve.csv");
    write_curve_table(path, t);
    {
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        EXPECT_EQ(header.rfind("tau,", 0), 0u);
    }
    CurveTable r = read_curve_table(path);
    EXPECT_EQ(r.lags, t.lags);
    CorrelatorCurve c = curve_from_table(r, "K_zphi");
    EXPECT_EQ(c.values, a.values);
    EXPECT_EQ(c.standard_error, a.standard_error);
    EXPECT_EQ(c.i, Channel::z);
    EXPECT_EQ(c.j, Channel::phi);
    CorrelatorCurve d = curve_from_table(r, "K_antisym");
    EXPECT_TRUE(d.antisymmetric);
    EXPECT_EQ(d.values, b.values);
    EXPECT_FALSE(d.has_errors());
    EXPECT_THROW(curve_from_table(r, "K_phiphi"), Error);
    EXPECT_EQ(error_column_name("K_phiz"), "err_phiz");
}

TEST(curve_csv, malformed_files) {
    auto path = scratch("badcurve.csv");
    {
        std::ofstream(path) << "lag,K_zz\n0,1\n";
    }
    EXPECT_THROW(read_curve_table(path), IoError);
    {
        std::ofstream(path) << "tau,K_zz\n0,1\n0.1\n";
    }
    EXPECT_THROW(read_curve_table(path), IoError);
    {
        std::ofstream(path) << "tau,K_zz\n0,abc\n";
    }
    EXPECT_THROW(read_curve_table(path), IoError);
    EXPECT_THROW(read_curve_table(scratch("nope.csv")), IoError);
}
