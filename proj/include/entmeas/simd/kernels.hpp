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

#include <span>
#include <string_view>

namespace entmeas::simd {

enum class Isa {
    kScalar,
    kAvx2,
};

std::string_view isa_name(Isa isa);

/// Inner-loop kernels over 4x4 complex matrices stored as 32 interleaved
/// doubles (re, im), row-major. Every variant performs the same IEEE
/// operations in the same order (no FMA contraction), so all variants are
/// bit-identical to the scalar reference.
struct KernelTable {
    Isa isa;
    /// out = a * b. `out` may alias neither input.
    void (*mul)(const double *a, const double *b, double *out);
    /// out = u * diag(d) * u^dagger.
    void (*diag_congruence)(const double *u, const double *d, double *out);
    /// In-place 2x2 complex rotation of rows p and q of m:
    ///   row_p <- r[0] * row_p + r[1] * row_q
    ///   row_q <- r[2] * row_p + r[3] * row_q
    /// with r given as 4 interleaved complex coefficients.
    void (*rotate_rows)(double *m, int p, int q, const double *r);
};

/// True when the variant was compiled in and the running CPU supports it.
bool isa_supported(Isa isa);

/// Kernel table for a specific variant. Throws std::invalid_argument if the
/// variant is unsupported.
const KernelTable &kernels(Isa isa);

/// Best supported variant, unless overridden via set_active_isa or the
/// ENTMEAS_ISA environment variable ("scalar" / "avx2").
const KernelTable &active();

void set_active_isa(Isa isa);

/// All variants usable on this machine, scalar first.
std::span<const Isa> supported_isas();

}  // namespace entmeas::simd
