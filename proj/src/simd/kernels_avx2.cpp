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

// AVX2 kernels. A 4x4 complex row is two __m256d registers holding
// (re, im, re, im). Products are mul + addsub with no FMA so results match
// the scalar reference exactly.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace entmeas::simd::detail {

namespace {

/// (cr + i ci) * v for each complex lane pair of v.
inline __m256d cmul_broadcast(double cr, double ci, __m256d v) {
    const __m256d re = _mm256_set1_pd(cr);
    const __m256d im = _mm256_set1_pd(ci);
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(re, v), _mm256_mul_pd(im, swapped));
}

}  // namespace

void mul_avx2(const double *a, const double *b, double *out) {
    const __m256d b0l = _mm256_loadu_pd(b + 0), b0h = _mm256_loadu_pd(b + 4);
    const __m256d b1l = _mm256_loadu_pd(b + 8), b1h = _mm256_loadu_pd(b + 12);
    const __m256d b2l = _mm256_loadu_pd(b + 16), b2h = _mm256_loadu_pd(b + 20);
    const __m256d b3l = _mm256_loadu_pd(b + 24), b3h = _mm256_loadu_pd(b + 28);
    for (int i = 0; i < 4; ++i) {
        const double *ar = a + 8 * i;
        __m256d lo = cmul_broadcast(ar[0], ar[1], b0l);
        __m256d hi = cmul_broadcast(ar[0], ar[1], b0h);
        lo = _mm256_add_pd(lo, cmul_broadcast(ar[2], ar[3], b1l));
        hi = _mm256_add_pd(hi, cmul_broadcast(ar[2], ar[3], b1h));
        lo = _mm256_add_pd(lo, cmul_broadcast(ar[4], ar[5], b2l));
        hi = _mm256_add_pd(hi, cmul_broadcast(ar[4], ar[5], b2h));
        lo = _mm256_add_pd(lo, cmul_broadcast(ar[6], ar[7], b3l));
        hi = _mm256_add_pd(hi, cmul_broadcast(ar[6], ar[7], b3h));
        _mm256_storeu_pd(out + 8 * i, lo);
        _mm256_storeu_pd(out + 8 * i + 4, hi);
    }
}

void diag_congruence_avx2(const double *u, const double *d, double *out) {
    alignas(32) double scaled[32];
    alignas(32) double adj[32];
    const __m256d dl = _mm256_set_pd(d[1], d[1], d[0], d[0]);
    const __m256d dh = _mm256_set_pd(d[3], d[3], d[2], d[2]);
    for (int i = 0; i < 4; ++i) {
        _mm256_store_pd(scaled + 8 * i, _mm256_mul_pd(_mm256_loadu_pd(u + 8 * i), dl));
        _mm256_store_pd(scaled + 8 * i + 4, _mm256_mul_pd(_mm256_loadu_pd(u + 8 * i + 4), dh));
    }
    adjoint_into(u, adj);
    mul_avx2(scaled, adj, out);
}

void rotate_rows_avx2(double *m, int p, int q, const double *r) {
    double *rp = m + 8 * p;
    double *rq = m + 8 * q;
    const __m256d xl = _mm256_loadu_pd(rp), xh = _mm256_loadu_pd(rp + 4);
    const __m256d yl = _mm256_loadu_pd(rq), yh = _mm256_loadu_pd(rq + 4);
    _mm256_storeu_pd(rp, _mm256_add_pd(cmul_broadcast(r[0], r[1], xl), cmul_broadcast(r[2], r[3], yl)));
    _mm256_storeu_pd(rp + 4, _mm256_add_pd(cmul_broadcast(r[0], r[1], xh), cmul_broadcast(r[2], r[3], yh)));
    _mm256_storeu_pd(rq, _mm256_add_pd(cmul_broadcast(r[4], r[5], xl), cmul_broadcast(r[6], r[7], yl)));
    _mm256_storeu_pd(rq + 4, _mm256_add_pd(cmul_broadcast(r[4], r[5], xh), cmul_broadcast(r[6], r[7], yh)));
}

}  // namespace entmeas::simd::detail
