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

// Per-variant kernel entry points. Only dispatch.cpp and the tests that pin a
// specific variant should include this.

namespace entmeas::simd::detail {

void mul_scalar(const double *a, const double *b, double *out);
void diag_congruence_scalar(const double *u, const double *d, double *out);
void rotate_rows_scalar(double *m, int p, int q, const double *r);

/// Shared by all variants: exact (no rounding) conjugate transpose.
inline void adjoint_into(const double *m, double *out) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[2 * (4 * j + i)] = m[2 * (4 * i + j)];
            out[2 * (4 * j + i) + 1] = -m[2 * (4 * i + j) + 1];
        }
    }
}

#if defined(ENTMEAS_HAVE_AVX2)
void mul_avx2(const double *a, const double *b, double *out);
void diag_congruence_avx2(const double *u, const double *d, double *out);
void rotate_rows_avx2(double *m, int p, int q, const double *r);
#endif

}  // namespace entmeas::simd::detail
