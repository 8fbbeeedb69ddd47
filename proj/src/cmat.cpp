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

#include "entmeas/cmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entmeas/error.hpp"
#include "entmeas/simd/kernels.hpp"
#include "entmeas/tolerances.hpp"

namespace entmeas {

Mat2 Mat2::identity() {
    return diagonal(1.0, 1.0);
}

Mat2 Mat2::diagonal(Complex d0, Complex d1) {
    Mat2 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    return m;
}

Mat2 Mat2::pauli_y() {
    Mat2 m;
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}

Mat4 Mat4::identity() {
    return diagonal({1.0, 1.0, 1.0, 1.0});
}

Mat4 Mat4::zero() {
    return Mat4{};
}

Mat4 Mat4::diagonal(const std::array<double, 4> &d) {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) = d[i];
    }
    return m;
}

Mat4 operator*(const Mat4 &a, const Mat4 &b) {
    Mat4 out;
    simd::active().mul(a.data(), b.data(), out.data());
    return out;
}

Mat4 operator+(const Mat4 &a, const Mat4 &b) {
    Mat4 out;
    for (std::size_t k = 0; k < 16; ++k) {
        out.e[k] = a.e[k] + b.e[k];
    }
    return out;
}

Mat4 operator-(const Mat4 &a, const Mat4 &b) {
    Mat4 out;
    for (std::size_t k = 0; k < 16; ++k) {
        out.e[k] = a.e[k] - b.e[k];
    }
    return out;
}

Mat4 operator*(Complex s, const Mat4 &a) {
    Mat4 out;
    for (std::size_t k = 0; k < 16; ++k) {
        out.e[k] = s * a.e[k];
    }
    return out;
}

Mat4 operator*(double s, const Mat4 &a) {
    Mat4 out;
    for (std::size_t k = 0; k < 16; ++k) {
        out.e[k] = s * a.e[k];
    }
    return out;
}

Mat4 adjoint(const Mat4 &m) {
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

Mat4 conjugate(const Mat4 &m) {
    Mat4 out;
    for (std::size_t k = 0; k < 16; ++k) {
        out.e[k] = std::conj(m.e[k]);
    }
    return out;
}

Mat4 transpose(const Mat4 &m) {
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out(j, i) = m(i, j);
        }
    }
    return out;
}

Complex trace(const Mat4 &m) {
    return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

Mat4 hermitian_part(const Mat4 &m) {
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        out(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

double max_abs(const Mat4 &m) {
    double r = 0.0;
    for (const Complex &z : m.e) {
        r = std::max(r, std::abs(z));
    }
    return r;
}

double max_abs_diff(const Mat4 &a, const Mat4 &b) {
    double r = 0.0;
    for (std::size_t k = 0; k < 16; ++k) {
        r = std::max(r, std::abs(a.e[k] - b.e[k]));
    }
    return r;
}

double frobenius_norm(const Mat4 &m) {
    double s = 0.0;
    for (const Complex &z : m.e) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double hermiticity_deviation(const Mat4 &m) {
    double r = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return r;
}

Mat4 diag_congruence(const Mat4 &u, const std::array<double, 4> &d) {
    Mat4 out;
    simd::active().diag_congruence(u.data(), d.data(), out.data());
    return out;
}

Mat4 kron2(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (std::size_t ar = 0; ar < 2; ++ar) {
        for (std::size_t ac = 0; ac < 2; ++ac) {
            for (std::size_t br = 0; br < 2; ++br) {
                for (std::size_t bc = 0; bc < 2; ++bc) {
                    out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

Mat4 partial_transpose_b(const Mat4 &m) {
    Mat4 out;
    for (std::size_t a_r = 0; a_r < 2; ++a_r) {
        for (std::size_t a_c = 0; a_c < 2; ++a_c) {
            for (std::size_t b_r = 0; b_r < 2; ++b_r) {
                for (std::size_t b_c = 0; b_c < 2; ++b_c) {
                    out(2 * a_r + b_r, 2 * a_c + b_c) = m(2 * a_r + b_c, 2 * a_c + b_r);
                }
            }
        }
    }
    return out;
}

Mat4 EigenDecomposition::reconstruct() const {
    return hermitian_part(diag_congruence(vectors, values));
}

namespace {

double off_diagonal_norm(const Mat4 &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

void check_hermitian(const Mat4 &m) {
    for (const Complex &z : m.e) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::kDomainError, "matrix has non-finite entries");
        }
    }
    const double dev = hermiticity_deviation(m);
    if (dev > kTolerances.hermiticity) {
        std::ostringstream os;
        os << "max |m - m^dagger| = " << dev << " exceeds " << kTolerances.hermiticity;
        throw Error(ErrorKind::kNonHermitianInput, os.str(), dev);
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const Mat4 &m) {
    check_hermitian(m);
    const auto &k = simd::active();

    Mat4 a = hermitian_part(m);
    // w holds V^dagger so that column rotations of V become row rotations.
    Mat4 w = Mat4::identity();
    const double threshold = kTolerances.jacobi_off_diagonal * std::max(1.0, frobenius_norm(a));

    for (int sweep = 0; sweep < kTolerances.jacobi_max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) < threshold) {
            break;
        }
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                const Complex g = apq / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // J = [[c, s], [-s conj(g), c conj(g)]] on (p, q); apply J^dagger from the left.
                const Complex jd01 = -s * g;
                const Complex jd11 = c * g;
                const double r[8] = {c, 0.0, jd01.real(), jd01.imag(), s, 0.0, jd11.real(), jd11.imag()};

                k.rotate_rows(a.data(), p, q, r);
                a = adjoint(a);
                k.rotate_rows(a.data(), p, q, r);
                a = adjoint(a);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                k.rotate_rows(w.data(), p, q, r);
            }
        }
    }

    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

    EigenDecomposition out;
    for (std::size_t col = 0; col < 4; ++col) {
        const std::size_t src = order[col];
        out.values[col] = a(src, src).real();
        for (std::size_t row = 0; row < 4; ++row) {
            out.vectors(row, col) = std::conj(w(src, row));
        }
    }
    return out;
}

std::array<double, 4> hermitian_eigenvalues(const Mat4 &m) {
    return hermitian_eig(m).values;
}

Mat4 psd_sqrt(const Mat4 &m) {
    EigenDecomposition eig = hermitian_eig(m);
    const double smallest = eig.values[3];
    if (smallest < -kTolerances.psd_clamp) {
        std::ostringstream os;
        os << "eigenvalue " << smallest << " below -" << kTolerances.psd_clamp;
        throw Error(ErrorKind::kNotPositiveSemidefinite, os.str(), smallest);
    }
    const double scale = std::max({1.0, std::abs(eig.values[0]), std::abs(smallest)});
    const double floor = kTolerances.eig_noise_floor * scale;
    std::array<double, 4> roots{};
    for (std::size_t i = 0; i < 4; ++i) {
        roots[i] = eig.values[i] <= floor ? 0.0 : std::sqrt(eig.values[i]);
    }
    return hermitian_part(diag_congruence(eig.vectors, roots));
}

}  // namespace entmeas
