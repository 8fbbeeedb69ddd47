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

#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace entmeas::oracle {

CMatrix4 to_eigen(const Mat4 &m) {
    CMatrix4 out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out(i, j) = m(i, j);
        }
    }
    return out;
}

Mat4 from_eigen(const CMatrix4 &m) {
    Mat4 out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out(i, j) = m(i, j);
        }
    }
    return out;
}

std::array<double, 4> hermitian_eigenvalues(const Mat4 &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix4> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev(3), ev(2), ev(1), ev(0)};
}

double concurrence_via_product(const Mat4 &rho_in) {
    const CMatrix4 rho = to_eigen(rho_in);
    CMatrix4 yy = CMatrix4::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const CMatrix4 flipped = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<CMatrix4> solver(rho * flipped, false);
    std::array<double, 4> l{};
    for (int k = 0; k < 4; ++k) {
        l[k] = std::sqrt(std::max(0.0, solver.eigenvalues()(k).real()));
    }
    std::sort(l.rbegin(), l.rend());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

std::array<std::complex<double>, 4> haar_vector(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::array<std::complex<double>, 4> v;
    double norm = 0.0;
    for (auto &z : v) {
        z = {g(rng), g(rng)};
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    for (auto &z : v) {
        z /= norm;
    }
    return v;
}

CMatrix4 haar_unitary_qr(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMatrix4 z;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            z(i, j) = {g(rng), g(rng)};
        }
    }
    Eigen::HouseholderQR<CMatrix4> qr(z);
    CMatrix4 q = qr.householderQ();
    const CMatrix4 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 4; ++j) {
        q.col(j) *= r(j, j) / std::abs(r(j, j));
    }
    return q;
}

double schmidt_entropy(const std::array<std::complex<double>, 4> &psi) {
    Eigen::Matrix2cd amp;
    amp << psi[0], psi[1], psi[2], psi[3];
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(amp);
    double h = 0.0;
    for (int k = 0; k < 2; ++k) {
        const double p = svd.singularValues()(k) * svd.singularValues()(k);
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

std::array<double, 4> dirichlet_spacings(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<double, 3> x{u(rng), u(rng), u(rng)};
    std::sort(x.begin(), x.end());
    return {x[0], x[1] - x[0], x[2] - x[1], 1.0 - x[2]};
}

std::array<double, 4> eigenphases(const CMatrix4 &u) {
    Eigen::ComplexEigenSolver<CMatrix4> solver(u, false);
    std::array<double, 4> ph{};
    for (int k = 0; k < 4; ++k) {
        double a = std::arg(solver.eigenvalues()(k));
        if (a < 0.0) {
            a += 2.0 * std::numbers::pi;
        }
        ph[k] = a;
    }
    std::sort(ph.begin(), ph.end());
    return ph;
}

double small_spacing_fraction(const std::array<double, 4> &ph, double threshold) {
    const double mean = 2.0 * std::numbers::pi / 4.0;
    int small = 0;
    for (int k = 0; k < 4; ++k) {
        const double gap = k < 3 ? ph[k + 1] - ph[k] : ph[0] + 2.0 * std::numbers::pi - ph[3];
        if (gap < threshold * mean) {
            ++small;
        }
    }
    return small / 4.0;
}

Mat4 random_matrix(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat4 m;
    for (Complex &z : m.e) {
        z = {u(rng), u(rng)};
    }
    return m;
}

}  // namespace entmeas::oracle
