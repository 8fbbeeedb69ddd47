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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace entmeas {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs each module's invariant suite on `samples` random inputs drawn from
/// `seed`. Backs the `selftest` CLI subcommand.
std::vector<SuiteResult> run_selftest(std::size_t samples = 1000, std::uint64_t seed = 2024);

}  // namespace entmeas
