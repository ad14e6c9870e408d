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
#include <stdexcept>
#include <string>

namespace qubitcorr {

enum class ErrorCode {
    invalid_parameter,
    invalid_argument,
    integration_diverged,
    invalid_window,
    empty_ensemble,
    unidentifiable,
    invalid_data,
    io,
};

const char *to_string(ErrorCode code);

/// Base class for every error raised by the library. The code identifies the
/// failure class so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// A step of the stochastic integrator produced a non-finite state.
class IntegrationDiverged : public Error {
   public:
    IntegrationDiverged(std::uint64_t step_index, std::uint64_t trace_index, const std::string &detail);
    std::uint64_t step_index() const noexcept {
        return step_index_;
    }
    std::uint64_t trace_index() const noexcept {
        return trace_index_;
    }

   private:
    std::uint64_t step_index_;
    std::uint64_t trace_index_;
};

class IoError : public Error {
   public:
    explicit IoError(const std::string &message) : Error(ErrorCode::io, message) {
    }
};

}  // namespace qubitcorr
