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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "qubitcorr/trajectory.hpp"

namespace qubitcorr {

/// QTRC binary trace container (little-endian):
///   "QTRC" | u32 version | u64 n_traces | u64 n_samples | f64 dt |
///   u32 json_len | json bytes | per trace: u64 seed, u64 projections,
///   n_samples x (f64 I_z, f64 I_phi).
inline constexpr std::uint32_t kTraceFormatVersion = 1;

struct TraceFileHeader {
    std::uint64_t n_traces = 0;
    std::uint64_t n_samples = 0;
    double dt = 0.0;
    nlohmann::json setup = nlohmann::json::object();
};

struct TraceFile {
    TraceFileHeader header;
    std::vector<TraceRecord> traces;
};

/// Streams traces to a QTRC file one at a time. The trace count is fixed up
/// front; close() fails if fewer traces were written.
class TraceWriter {
   public:
    TraceWriter(const std::filesystem::path &path, const TraceFileHeader &header);
    ~TraceWriter();
    TraceWriter(const TraceWriter &) = delete;
    TraceWriter &operator=(const TraceWriter &) = delete;

    void write(const TraceRecord &trace);
    void close();

    std::uint64_t written() const {
        return written_;
    }

   private:
    std::filesystem::path path_;
    std::ofstream out_;
    TraceFileHeader header_;
    std::uint64_t written_ = 0;
    bool closed_ = false;
};

void write_traces(const std::filesystem::path &path, const std::vector<TraceRecord> &traces, const nlohmann::json &setup);

TraceFileHeader read_trace_header(const std::filesystem::path &path);
TraceFile read_traces(const std::filesystem::path &path);

/// CSV with columns trace,t,I_z,I_phi (t is the start of each sample bin).
void export_traces_csv(const std::filesystem::path &path, const std::vector<TraceRecord> &traces);
std::vector<TraceRecord> import_traces_csv(const std::filesystem::path &path);

}  // namespace qubitcorr
