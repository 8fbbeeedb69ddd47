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

// Independent reference computations for the test suites. Everything here is
// built on Eigen and std::mt19937_64 so it shares no code path with the
// library it checks.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <random>

#include "entmeas/cmat.hpp"

namespace entmeas::oracle {

using CMatrix4 = Eigen::Matrix<std::complex<double>, 4, 4>;

CMatrix4 to_eigen(const Mat4 &m);
Mat4 from_eigen(const CMatrix4 &m);

/// Descending eigenvalues via Eigen::SelfAdjointEigenSolver.
std::array<double, 4> hermitian_eigenvalues(const Mat4 &m);

/// Concurrence from the square roots of the eigenvalues of rho * rho~, where
/// rho~ is built from an explicitly written sigma_y (x) sigma_y.
double concurrence_via_product(const Mat4 &rho);

/// Normalized complex Gaussian vector (Haar on the unit sphere of C^4).
std::array<std::complex<double>, 4> haar_vector(std::mt19937_64 &rng);

/// Haar unitary via QR of a complex Ginibre matrix with the R-diagonal phase fix.
CMatrix4 haar_unitary_qr(std::mt19937_64 &rng);

/// Entanglement entropy of a pure two-qubit state from its Schmidt
/// coefficients (singular values of the 2x2 amplitude matrix).
double schmidt_entropy(const std::array<std::complex<double>, 4> &psi);

/// Uniform point on the 3-simplex from the spacings of 3 sorted uniforms.
std::array<double, 4> dirichlet_spacings(std::mt19937_64 &rng);

/// Sorted eigenphases in [0, 2 pi) of a unitary, via ComplexEigenSolver.
std::array<double, 4> eigenphases(const CMatrix4 &u);

/// Fraction of nearest-neighbour (cyclic) eigenphase spacings below
/// `threshold` times the mean spacing 2 pi / 4.
double small_spacing_fraction(const std::array<double, 4> &phases, double threshold);

/// Random matrix with entries uniform in [-1, 1] + i[-1, 1].
Mat4 random_matrix(std::mt19937_64 &rng);

}  // namespace entmeas::oracle
