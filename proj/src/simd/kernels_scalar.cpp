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

// Scalar reference kernels. Built with -ffp-contract=off so the compiler
// cannot fuse multiply-adds; the SIMD variants reproduce these results bit
// for bit.

#include "kernels_internal.hpp"

namespace entmeas::simd::detail {

namespace {

struct Term {
    double re;
    double im;
};

inline Term cmul(double ar, double ai, double br, double bi) {
    return {ar * br - ai * bi, ar * bi + ai * br};
}

}  // namespace

void mul_scalar(const double *a, const double *b, double *out) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double *ar = a + 8 * i;
            Term acc = cmul(ar[0], ar[1], b[2 * j], b[2 * j + 1]);
            for (int k = 1; k < 4; ++k) {
                const double *bk = b + 8 * k + 2 * j;
                Term t = cmul(ar[2 * k], ar[2 * k + 1], bk[0], bk[1]);
                acc.re = acc.re + t.re;
                acc.im = acc.im + t.im;
            }
            out[8 * i + 2 * j] = acc.re;
            out[8 * i + 2 * j + 1] = acc.im;
        }
    }
}

void diag_congruence_scalar(const double *u, const double *d, double *out) {
    double scaled[32];
    double adj[32];
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            scaled[8 * i + 2 * k] = u[8 * i + 2 * k] * d[k];
            scaled[8 * i + 2 * k + 1] = u[8 * i + 2 * k + 1] * d[k];
        }
    }
    adjoint_into(u, adj);
    mul_scalar(scaled, adj, out);
}

void rotate_rows_scalar(double *m, int p, int q, const double *r) {
    double *rp = m + 8 * p;
    double *rq = m + 8 * q;
    for (int k = 0; k < 4; ++k) {
        const double xr = rp[2 * k], xi = rp[2 * k + 1];
        const double yr = rq[2 * k], yi = rq[2 * k + 1];
        Term a = cmul(r[0], r[1], xr, xi);
        Term b = cmul(r[2], r[3], yr, yi);
        Term c = cmul(r[4], r[5], xr, xi);
        Term d = cmul(r[6], r[7], yr, yi);
        rp[2 * k] = a.re + b.re;
        rp[2 * k + 1] = a.im + b.im;
        rq[2 * k] = c.re + d.re;
        rq[2 * k + 1] = c.im + d.im;
    }
}

}  // namespace entmeas::simd::detail
