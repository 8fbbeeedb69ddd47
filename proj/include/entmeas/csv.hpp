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

#include <string>
#include <string_view>
#include <vector>

namespace entmeas::csv {

/// 17 significant digits ("%.17g"); parses back to the identical double.
std::string format_double(double v);

/// Splits on ',' and parses each field as a double with std::from_chars.
/// Surrounding whitespace per field is ignored. Throws Error(kParseError).
std::vector<double> parse_row(std::string_view row);

}  // namespace entmeas::csv
