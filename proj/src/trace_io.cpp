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

#include "qubitcorr/trace_io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>

#include "qubitcorr/error.hpp"

namespace qubitcorr {

static_assert(std::endian::native == std::endian::little, "QTRC I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'Q', 'T', 'R', 'C'};

template <typename T>
void put(std::ostream &out, T value) {
    out.write(reinterpret_cast<const char *>(&value), sizeof(T));
}

template <typename T>
T get(std::istream &in, const std::filesystem::path &path) {
    T value;
    if (!in.read(reinterpret_cast<char *>(&value), sizeof(T))) {
        throw IoError("truncated trace file " + path.string());
    }
    return value;
}

void read_header(std::istream &in, const std::filesystem::path &path, TraceFileHeader &h) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
        throw IoError("not a QTRC trace file: " + path.string());
    }
    auto version = get<std::uint32_t>(in, path);
    if (version != kTraceFormatVersion) {
        throw IoError("unsupported QTRC version " + std::to_string(version) + " in " + path.string());
    }
    h.n_traces = get<std::uint64_t>(in, path);
    h.n_samples = get<std::uint64_t>(in, path);
    h.dt = get<double>(in, path);
    auto len = get<std::uint32_t>(in, path);
    std::string text(len, '\0');
    if (len > 0 && !in.read(text.data(), len)) {
        throw IoError("truncated trace file " + path.string());
    }
    try {
        h.setup = text.empty() ? nlohmann::json::object() : nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw IoError("malformed setup block in " + path.string() + ": " + e.what());
    }
}

std::ifstream open_input(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return in;
}

}  // namespace

TraceWriter::TraceWriter(const std::filesystem::path &path, const TraceFileHeader &header)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), header_(header) {
    if (!out_) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    std::string text = header.setup.dump();
    out_.write(kMagic, 4);
    put<std::uint32_t>(out_, kTraceFormatVersion);
    put<std::uint64_t>(out_, header.n_traces);
    put<std::uint64_t>(out_, header.n_samples);
    put<double>(out_, header.dt);
    put<std::uint32_t>(out_, static_cast<std::uint32_t>(text.size()));
    out_.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out_) {
        throw IoError("write failed on " + path.string());
    }
}

TraceWriter::~TraceWriter() {
    if (!closed_) {
        out_.close();
    }
}

void TraceWriter::write(const TraceRecord &trace) {
    if (written_ >= header_.n_traces) {
        throw Error(ErrorCode::invalid_argument, "more traces written than declared in the header");
    }
    if (trace.size() != header_.n_samples) {
        throw Error(ErrorCode::invalid_argument, "trace length does not match the header");
    }
    put<std::uint64_t>(out_, trace.seed);
    put<std::uint64_t>(out_, trace.projections);
    // Row-major interleaving (I_z, I_phi) per sample.
    Eigen::Matrix<double, Eigen::Dynamic, 2, Eigen::RowMajor> rows = trace.samples;
    out_.write(reinterpret_cast<const char *>(rows.data()), static_cast<std::streamsize>(rows.size() * sizeof(double)));
    if (!out_) {
        throw IoError("write failed on " + path_.string());
    }
    ++written_;
}

void TraceWriter::close() {
    if (closed_) {
        return;
    }
    closed_ = true;
    out_.close();
    if (!out_) {
        throw IoError("write failed on " + path_.string());
    }
    if (written_ != header_.n_traces) {
        throw IoError(
            "trace file " + path_.string() + " declares " + std::to_string(header_.n_traces) + " traces but " +
            std::to_string(written_) + " were written");
    }
}

void write_traces(const std::filesystem::path &path, const std::vector<TraceRecord> &traces, const nlohmann::json &setup) {
    TraceFileHeader h;
    h.n_traces = traces.size();
    h.n_samples = traces.empty() ? 0 : traces.front().size();
    h.dt = traces.empty() ? 0.0 : traces.front().dt;
    h.setup = setup;
    TraceWriter writer(path, h);
    for (const auto &t : traces) {
        writer.write(t);
    }
    writer.close();
}

TraceFileHeader read_trace_header(const std::filesystem::path &path) {
    auto in = open_input(path);
    TraceFileHeader h;
    read_header(in, path, h);
    return h;
}

TraceFile read_traces(const std::filesystem::path &path) {
    auto in = open_input(path);
    TraceFile file;
    read_header(in, path, file.header);
    const auto n = static_cast<Eigen::Index>(file.header.n_samples);
    file.traces.reserve(file.header.n_traces);
    Eigen::Matrix<double, Eigen::Dynamic, 2, Eigen::RowMajor> rows(n, 2);
    for (std::uint64_t k = 0; k < file.header.n_traces; ++k) {
        TraceRecord rec;
        rec.dt = file.header.dt;
        rec.seed = get<std::uint64_t>(in, path);
        rec.projections = get<std::uint64_t>(in, path);
        if (n > 0 && !in.read(reinterpret_cast<char *>(rows.data()), static_cast<std::streamsize>(rows.size() * sizeof(double)))) {
            throw IoError("truncated trace file " + path.string());
        }
        rec.samples = rows;
        file.traces.push_back(std::move(rec));
    }
    return file;
}

void export_traces_csv(const std::filesystem::path &path, const std::vector<TraceRecord> &traces) {
    std::FILE *f = std::fopen(path.string().c_str(), "w");
    if (f == nullptr) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    std::fputs("trace,t,I_z,I_phi\n", f);
    for (std::size_t k = 0; k < traces.size(); ++k) {
        const auto &t = traces[k];
        for (Eigen::Index i = 0; i < t.samples.rows(); ++i) {
            std::fprintf(
                f, "%llu,%.17g,%.17g,%.17g\n", static_cast<unsigned long long>(t.seed), static_cast<double>(i) * t.dt,
                t.samples(i, 0), t.samples(i, 1));
        }
    }
    if (std::fclose(f) != 0) {
        throw IoError("write failed on " + path.string());
    }
}

std::vector<TraceRecord> import_traces_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line.rfind("trace,t,I_z,I_phi", 0) != 0) {
        throw IoError("missing trace CSV header in " + path.string());
    }

    struct Partial {
        std::uint64_t seed;
        std::vector<double> t, iz, ip;
    };
    std::vector<Partial> parts;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        std::istringstream ss(line);
        std::string cell[4];
        for (auto &c : cell) {
            if (!std::getline(ss, c, ',')) {
                throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 4 columns");
            }
        }
        try {
            std::uint64_t seed = std::stoull(cell[0]);
            if (parts.empty() || parts.back().seed != seed) {
                parts.push_back({seed, {}, {}, {}});
            }
            parts.back().t.push_back(std::stod(cell[1]));
            parts.back().iz.push_back(std::stod(cell[2]));
            parts.back().ip.push_back(std::stod(cell[3]));
        } catch (const std::exception &) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed number");
        }
    }

    std::vector<TraceRecord> out;
    out.reserve(parts.size());
    for (auto &p : parts) {
        TraceRecord rec;
        rec.seed = p.seed;
        const auto n = static_cast<Eigen::Index>(p.t.size());
        rec.dt = n > 1 ? (p.t.back() - p.t.front()) / static_cast<double>(n - 1) : 0.0;
        rec.samples.resize(n, 2);
        for (Eigen::Index i = 0; i < n; ++i) {
            rec.samples(i, 0) = p.iz[static_cast<std::size_t>(i)];
            rec.samples(i, 1) = p.ip[static_cast<std::size_t>(i)];
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace qubitcorr
