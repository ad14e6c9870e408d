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

#include "qubitcorr/curve_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qubitcorr/error.hpp"

namespace qubitcorr {

namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        if (!cell.empty() && cell.back() == '\r') {
            cell.pop_back();
        }
        out.push_back(cell);
    }
    return out;
}

}  // namespace

bool CurveTable::has(const std::string &name) const {
    for (const auto &c : columns) {
        if (c.first == name) {
            return true;
        }
    }
    return false;
}

const Eigen::VectorXd &CurveTable::column(const std::string &name) const {
    for (const auto &c : columns) {
        if (c.first == name) {
            return c.second;
        }
    }
    throw Error(ErrorCode::invalid_data, "curve table has no column '" + name + "'");
}

void CurveTable::set(const std::string &name, Eigen::VectorXd values) {
    if (values.size() != lags.size()) {
        throw Error(ErrorCode::invalid_argument, "column '" + name + "' does not match the lag grid");
    }
    for (auto &c : columns) {
        if (c.first == name) {
            c.second = std::move(values);
            return;
        }
    }
    columns.emplace_back(name, std::move(values));
}

std::string error_column_name(const std::string &value_column) {
    if (value_column.rfind("K_", 0) == 0) {
        return "err_" + value_column.substr(2);
    }
    return "err_" + value_column;
}

CurveTable make_curve_table(const std::vector<CorrelatorCurve> &curves) {
    CurveTable table;
    if (curves.empty()) {
        return table;
    }
    table.lags = curves.front().lags;
    for (const auto &c : curves) {
        if (c.lags.size() != table.lags.size() || (c.lags - table.lags).cwiseAbs().maxCoeff() > 1e-12) {
            throw Error(ErrorCode::invalid_argument, "curves in one table must share a lag grid");
        }
        table.set(curve_label(c), c.values);
    }
    for (const auto &c : curves) {
        if (c.has_errors()) {
            table.set(error_column_name(curve_label(c)), c.standard_error);
        }
    }
    return table;
}

CorrelatorCurve curve_from_table(const CurveTable &table, const std::string &column) {
    CorrelatorCurve curve;
    curve.lags = table.lags;
    curve.values = table.column(column);
    if (table.has(error_column_name(column))) {
        curve.standard_error = table.column(error_column_name(column));
    }
    if (column == "K_antisym") {
        curve.antisymmetric = true;
        curve.i = Channel::z;
        curve.j = Channel::phi;
    } else if (column == "K_zz" || column == "K_zphi" || column == "K_phiz" || column == "K_phiphi") {
        std::string pair = column.substr(2);
        curve.i = pair.rfind("z", 0) == 0 ? Channel::z : Channel::phi;
        curve.j = pair.back() == 'z' ? Channel::z : Channel::phi;
    }
    return curve;
}

void write_curve_table(const std::filesystem::path &path, const CurveTable &table) {
    std::FILE *f = std::fopen(path.string().c_str(), "w");
    if (f == nullptr) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    std::fputs("tau", f);
    for (const auto &c : table.columns) {
        std::fprintf(f, ",%s", c.first.c_str());
    }
    std::fputc('\n', f);
    for (Eigen::Index k = 0; k < table.lags.size(); ++k) {
        std::fprintf(f, "%.17g", table.lags(k));
        for (const auto &c : table.columns) {
            std::fprintf(f, ",%.17g", c.second(k));
        }
        std::fputc('\n', f);
    }
    if (std::fclose(f) != 0) {
        throw IoError("write failed on " + path.string());
    }
}

CurveTable read_curve_table(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("empty curve file " + path.string());
    }
    auto header = split_csv(line);
    if (header.empty() || header.front() != "tau") {
        throw IoError("curve file " + path.string() + " must start with a 'tau' column");
    }
    std::vector<std::vector<double>> cols(header.size());
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        auto cells = split_csv(line);
        if (cells.size() != header.size()) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": wrong column count");
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            try {
                cols[c].push_back(std::stod(cells[c]));
            } catch (const std::exception &) {
                throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed number");
            }
        }
    }
    CurveTable table;
    table.lags = Eigen::Map<Eigen::VectorXd>(cols[0].data(), static_cast<Eigen::Index>(cols[0].size()));
    for (std::size_t c = 1; c < header.size(); ++c) {
        table.set(header[c], Eigen::Map<Eigen::VectorXd>(cols[c].data(), static_cast<Eigen::Index>(cols[c].size())));
    }
    return table;
}

}  // namespace qubitcorr
