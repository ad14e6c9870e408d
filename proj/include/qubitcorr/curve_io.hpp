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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qubitcorr/analytic.hpp"

namespace qubitcorr {

/// A lag column ("tau") plus named value columns, e.g. K_zz, K_zphi,
/// err_zphi, K_antisym. Written and read as CSV.
struct CurveTable {
    Eigen::VectorXd lags;
    std::vector<std::pair<std::string, Eigen::VectorXd>> columns;

    bool has(const std::string &name) const;
    const Eigen::VectorXd &column(const std::string &name) const;
    void set(const std::string &name, Eigen::VectorXd values);
};

/// Column holding the standard error of a value column: K_zphi -> err_zphi.
std::string error_column_name(const std::string &value_column);

/// Builds a table from curves sharing one lag grid; error columns are added
/// for curves that carry standard errors.
CurveTable make_curve_table(const std::vector<CorrelatorCurve> &curves);

/// Extracts one curve by column name ("K_zz", ..., "K_antisym"), attaching
/// its error column when present.
CorrelatorCurve curve_from_table(const CurveTable &table, const std::string &column);

void write_curve_table(const std::filesystem::path &path, const CurveTable &table);
CurveTable read_curve_table(const std::filesystem::path &path);

}  // namespace qubitcorr
