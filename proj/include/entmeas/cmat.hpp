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
#include <complex>
#include <cstddef>

namespace entmeas {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<Complex, 4> e{};

    Complex &operator()(std::size_t r, std::size_t c) {
        return e[2 * r + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return e[2 * r + c];
    }

    static Mat2 identity();
    static Mat2 diagonal(Complex d0, Complex d1);
    static Mat2 pauli_y();

    bool operator==(const Mat2 &) const = default;
};

/// Dense 4x4 complex matrix, row-major over the computational basis
/// |00>, |01>, |10>, |11> (qubit A is the high bit).
struct alignas(32) Mat4 {
    std::array<Complex, 16> e{};

    Complex &operator()(std::size_t r, std::size_t c) {
        return e[4 * r + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return e[4 * r + c];
    }

    static Mat4 identity();
    static Mat4 zero();
    static Mat4 diagonal(const std::array<double, 4> &d);

    double *data() noexcept {
        return reinterpret_cast<double *>(e.data());
    }
    const double *data() const noexcept {
        return reinterpret_cast<const double *>(e.data());
    }

    bool operator==(const Mat4 &) const = default;
};

Mat4 operator*(const Mat4 &a, const Mat4 &b);
Mat4 operator+(const Mat4 &a, const Mat4 &b);
Mat4 operator-(const Mat4 &a, const Mat4 &b);
Mat4 operator*(Complex s, const Mat4 &a);
Mat4 operator*(double s, const Mat4 &a);

Mat4 adjoint(const Mat4 &m);
Mat4 conjugate(const Mat4 &m);
Mat4 transpose(const Mat4 &m);
Complex trace(const Mat4 &m);

/// (m + m^dagger) / 2 with an exactly real diagonal.
Mat4 hermitian_part(const Mat4 &m);

double max_abs(const Mat4 &m);
double max_abs_diff(const Mat4 &a, const Mat4 &b);
double frobenius_norm(const Mat4 &m);
/// max |m - m^dagger|.
double hermiticity_deviation(const Mat4 &m);

/// u * diag(d) * u^dagger.
Mat4 diag_congruence(const Mat4 &u, const std::array<double, 4> &d);

/// Kronecker product a (x) b; a acts on qubit A.
Mat4 kron2(const Mat2 &a, const Mat2 &b);

/// Transposes qubit B: in the 2x2-block view indexed by qubit A, every block
/// is transposed.
Mat4 partial_transpose_b(const Mat4 &m);

struct EigenDecomposition {
    /// Descending.
    std::array<double, 4> values{};
    /// Column k is the eigenvector of values[k].
    Mat4 vectors;

    Mat4 reconstruct() const;
};

/// Cyclic complex Jacobi on a 4x4 Hermitian matrix.
/// Throws Error(kNonHermitianInput) if max |m - m^dagger| exceeds the
/// hermiticity tolerance.
EigenDecomposition hermitian_eig(const Mat4 &m);

/// Descending eigenvalues only.
std::array<double, 4> hermitian_eigenvalues(const Mat4 &m);

/// Hermitian PSD square root. Eigenvalues in [-psd_clamp, 0) and those under
/// the eigensolver noise floor are zeroed first; anything more negative
/// throws Error(kNotPositiveSemidefinite).
Mat4 psd_sqrt(const Mat4 &m);

}  // namespace entmeas
