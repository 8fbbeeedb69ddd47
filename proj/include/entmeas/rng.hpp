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

#include <array>
#include <cstdint>

namespace entmeas {

/// Philox4x32-10 counter-based block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Reproducible uniform stream. The key is the 64-bit seed; the counter holds
/// a 64-bit block index and a 64-bit substream index, so (seed, substream)
/// pairs give independent streams with period 2^64 blocks each.
class RngStream {
   public:
    explicit RngStream(std::uint64_t seed, std::uint64_t substream = 0) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform in [0, 1) from the top 53 bits of next_u64().
    double uniform() noexcept;

    std::uint64_t seed() const noexcept {
        return seed_;
    }
    std::uint64_t substream() const noexcept {
        return substream_;
    }

   private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t substream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int buffered_ = 0;
};

}  // namespace entmeas
