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

#include <array>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "entmeas/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace entmeas::simd {

namespace {

constexpr KernelTable kScalarTable{
    Isa::kScalar,
    &detail::mul_scalar,
    &detail::diag_congruence_scalar,
    &detail::rotate_rows_scalar,
};

#if defined(ENTMEAS_HAVE_AVX2)
constexpr KernelTable kAvx2Table{
    Isa::kAvx2,
    &detail::mul_avx2,
    &detail::diag_congruence_avx2,
    &detail::rotate_rows_avx2,
};
#endif

bool cpu_has_avx2() {
#if defined(ENTMEAS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable *initial_table() {
    if (const char *env = std::getenv("ENTMEAS_ISA")) {
        std::string v(env);
        if (v == "scalar") {
            return &kScalarTable;
        }
        if (v == "avx2" && isa_supported(Isa::kAvx2)) {
            return &kernels(Isa::kAvx2);
        }
    }
    if (isa_supported(Isa::kAvx2)) {
        return &kernels(Isa::kAvx2);
    }
    return &kScalarTable;
}

std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{initial_table()};
    return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return "scalar";
        case Isa::kAvx2:
            return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return true;
        case Isa::kAvx2:
            return cpu_has_avx2();
    }
    return false;
}

const KernelTable &kernels(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument("kernel variant not supported here: " + std::string(isa_name(isa)));
    }
    switch (isa) {
        case Isa::kScalar:
            return kScalarTable;
        case Isa::kAvx2:
#if defined(ENTMEAS_HAVE_AVX2)
            return kAvx2Table;
#else
            break;
#endif
    }
    return kScalarTable;
}

const KernelTable &active() {
    return *active_slot().load(std::memory_order_relaxed);
}

void set_active_isa(Isa isa) {
    active_slot().store(&kernels(isa), std::memory_order_relaxed);
}

std::span<const Isa> supported_isas() {
    static const std::vector<Isa> isas = [] {
        std::vector<Isa> v{Isa::kScalar};
        if (isa_supported(Isa::kAvx2)) {
            v.push_back(Isa::kAvx2);
        }
        return v;
    }();
    return isas;
}

}  // namespace entmeas::simd
