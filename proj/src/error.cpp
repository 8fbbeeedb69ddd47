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

#include "entmeas/error.hpp"

#include <cmath>
#include <limits>

namespace entmeas {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kNonHermitianInput:
            return "NonHermitianInput";
        case ErrorKind::kNotPositiveSemidefinite:
            return "NotPositiveSemidefinite";
        case ErrorKind::kTraceNotOne:
            return "TraceNotOne";
        case ErrorKind::kDomainError:
            return "DomainError";
        case ErrorKind::kParameterOutOfRange:
            return "ParameterOutOfRange";
        case ErrorKind::kBadIndices:
            return "BadIndices";
        case ErrorKind::kZeroDenominator:
            return "ZeroDenominator";
        case ErrorKind::kSeparableInput:
            return "SeparableInput";
        case ErrorKind::kParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what, double deviation)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind), deviation_(deviation) {
}

Error::Error(ErrorKind kind, const std::string &what)
    : Error(kind, what, std::numeric_limits<double>::quiet_NaN()) {
}

}  // namespace entmeas
