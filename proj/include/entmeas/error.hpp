// Copyright 2026 The entmeas Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace entmeas {

enum class ErrorKind {
    kNonHermitianInput,
    kNotPositiveSemidefinite,
    kTraceNotOne,
    kDomainError,
    kParameterOutOfRange,
    kBadIndices,
    kZeroDenominator,
    kSeparableInput,
    kParseError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Library error. `deviation()` carries the measured violation (max-abs
/// deviation, offending eigenvalue, offending argument) when one exists,
/// and NaN otherwise.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what, double deviation);
    Error(ErrorKind kind, const std::string &what);

    ErrorKind kind() const noexcept {
        return kind_;
    }
    double deviation() const noexcept {
        return deviation_;
    }

   private:
    ErrorKind kind_;
    double deviation_;
};

}  // namespace entmeas
