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

#include "entmeas/qstate.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "entmeas/csv.hpp"
#include "entmeas/error.hpp"
#include "entmeas/tolerances.hpp"

namespace entmeas {

DensityMatrix DensityMatrix::from_matrix(const Mat4 &m) {
    for (const Complex &z : m.e) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::kDomainError, "density matrix has non-finite entries");
        }
    }
    const double herm = hermiticity_deviation(m);
    if (herm > kTolerances.hermiticity) {
        std::ostringstream os;
        os << "not Hermitian: max |m - m^dagger| = " << herm;
        throw Error(ErrorKind::kNonHermitianInput, os.str(), herm);
    }
    const Mat4 h = hermitian_part(m);
    const double tr = trace(h).real();
    if (std::abs(tr - 1.0) > kTolerances.trace) {
        std::ostringstream os;
        os << "trace is " << tr << ", deviation " << tr - 1.0;
        throw Error(ErrorKind::kTraceNotOne, os.str(), tr - 1.0);
    }
    const double smallest = hermitian_eigenvalues(h)[3];
    if (smallest < -kTolerances.psd_clamp) {
        std::ostringstream os;
        os << "not positive semidefinite: smallest eigenvalue " << smallest;
        throw Error(ErrorKind::kNotPositiveSemidefinite, os.str(), smallest);
    }
    return DensityMatrix(h);
}

SchmidtCoefficient::SchmidtCoefficient(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorKind::kParameterOutOfRange, "Schmidt coefficient must lie in [0, 1]", alpha);
    }
}

double SchmidtCoefficient::beta() const noexcept {
    return std::sqrt(std::max(0.0, 1.0 - alpha_ * alpha_));
}

WernerFidelity::WernerFidelity(double f) : f_(f) {
    if (!(f >= 0.25 && f <= 1.0)) {
        throw Error(ErrorKind::kParameterOutOfRange, "Werner fidelity must lie in [1/4, 1]", f);
    }
}

namespace {

Mat4 projector(const std::array<Complex, 4> &psi) {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            m(i, j) = psi[i] * std::conj(psi[j]);
        }
    }
    return m;
}

Mat4 singlet_projector() {
    // (|01> - |10>)/sqrt(2): entries are exactly +-1/2 in the {01, 10} block.
    Mat4 m;
    m(1, 1) = 0.5;
    m(2, 2) = 0.5;
    m(1, 2) = -0.5;
    m(2, 1) = -0.5;
    return m;
}

}  // namespace

DensityMatrix pure_state(const std::array<Complex, 4> &psi) {
    return DensityMatrix::from_matrix(projector(psi));
}

DensityMatrix pure_schmidt(SchmidtCoefficient alpha) {
    return pure_state({alpha.alpha(), 0.0, 0.0, alpha.beta()});
}

DensityMatrix singlet() {
    return DensityMatrix::from_matrix(singlet_projector());
}

DensityMatrix werner_state(WernerFidelity f) {
    const double F = f.value();
    const double weight = (4.0 * F - 1.0) / 3.0;
    const double noise = (1.0 - F) / 3.0;
    return DensityMatrix::from_matrix(weight * singlet_projector() + noise * Mat4::identity());
}

DensityMatrix maximally_mixed() {
    return DensityMatrix::from_matrix(Mat4::diagonal({0.25, 0.25, 0.25, 0.25}));
}

std::string to_csv_row(const DensityMatrix &rho) {
    std::string row;
    const double *d = rho.matrix().data();
    for (int k = 0; k < 32; ++k) {
        if (k) {
            row += ',';
        }
        row += csv::format_double(d[k]);
    }
    return row;
}

DensityMatrix density_from_csv_row(std::string_view row) {
    const std::vector<double> v = csv::parse_row(row);
    if (v.size() != 32) {
        throw Error(ErrorKind::kParseError, "state row needs 32 numbers, got " + std::to_string(v.size()));
    }
    Mat4 m;
    for (std::size_t k = 0; k < 16; ++k) {
        m.e[k] = Complex(v[2 * k], v[2 * k + 1]);
    }
    return DensityMatrix::from_matrix(m);
}

void write_states_csv(std::ostream &out, std::span<const DensityMatrix> states) {
    for (const DensityMatrix &rho : states) {
        out << to_csv_row(rho) << '\n';
    }
}

std::vector<DensityMatrix> read_states_csv(std::istream &in) {
    std::vector<DensityMatrix> states;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view v(line);
        while (!v.empty() && (v.back() == '\r' || v.back() == ' ')) {
            v.remove_suffix(1);
        }
        if (v.empty() || v.front() == '#') {
            continue;
        }
        states.push_back(density_from_csv_row(v));
    }
    return states;
}

}  // namespace entmeas
