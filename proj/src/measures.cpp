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

#include "entmeas/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entmeas/csv.hpp"
#include "entmeas/error.hpp"
#include "entmeas/tolerances.hpp"

namespace entmeas {

namespace {

const Mat4 &sigma_yy() {
    static const Mat4 m = kron2(Mat2::pauli_y(), Mat2::pauli_y());
    return m;
}

double clamp_unit(double x, const char *what) {
    const double slack = kTolerances.domain_slack;
    if (!(x >= -slack && x <= 1.0 + slack)) {
        throw Error(ErrorKind::kDomainError, std::string(what) + " outside [0, 1]", x);
    }
    return std::clamp(x, 0.0, 1.0);
}

}  // namespace

Mat4 spin_flip(const DensityMatrix &rho) {
    return sigma_yy() * conjugate(rho.matrix()) * sigma_yy();
}

std::array<double, 4> r_eigenvalues(const DensityMatrix &rho) {
    const Mat4 root = psd_sqrt(rho.matrix());
    const Mat4 inner = hermitian_part(root * spin_flip(rho) * root);
    const Mat4 r = psd_sqrt(inner);
    std::array<double, 4> lambda = hermitian_eigenvalues(r);
    for (double &l : lambda) {
        l = std::max(l, 0.0);
    }
    return lambda;
}

double concurrence_from_r_eigenvalues(const std::array<double, 4> &lambda) {
    const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::clamp(c, 0.0, 1.0);
}

double concurrence(const DensityMatrix &rho) {
    return concurrence_from_r_eigenvalues(r_eigenvalues(rho));
}

double binary_entropy(double x) {
    x = clamp_unit(x, "binary entropy argument");
    double h = 0.0;
    if (x > 0.0) {
        h -= x * std::log2(x);
    }
    if (x < 1.0) {
        h -= (1.0 - x) * std::log2(1.0 - x);
    }
    return h;
}

double ef_from_concurrence(double c) {
    c = clamp_unit(c, "concurrence");
    const double root = std::sqrt(1.0 - c * c);
    // h((1 + root) / 2) evaluated through the minor weight (1 - root) / 2,
    // written without cancellation so small C keeps full relative precision.
    const double minor = c * c / (2.0 * (1.0 + root));
    if (minor <= 0.0) {
        return 0.0;
    }
    const double major = 0.5 * (1.0 + root);
    return -major * std::log1p(-minor) / std::numbers::ln2 - minor * std::log2(minor);
}

double e_formation(const DensityMatrix &rho) {
    return ef_from_concurrence(concurrence(rho));
}

std::array<double, 4> pt_eigenvalues(const DensityMatrix &rho) {
    return hermitian_eigenvalues(partial_transpose_b(rho.matrix()));
}

double e_negative_from_pt(const std::array<double, 4> &pt) {
    return std::abs(std::min(0.0, pt[3]));
}

double e_negative(const DensityMatrix &rho) {
    return e_negative_from_pt(pt_eigenvalues(rho));
}

double e_sum_from_pt(const std::array<double, 4> &pt) {
    double s = 0.0;
    for (double l : pt) {
        s += std::abs(l);
    }
    return std::max(0.0, s - 1.0);
}

double e_sum(const DensityMatrix &rho) {
    return e_sum_from_pt(pt_eigenvalues(rho));
}

double linear_entropy(const DensityMatrix &rho) {
    double purity = 0.0;
    for (const Complex &z : rho.matrix().e) {
        purity += std::norm(z);
    }
    return std::clamp(1.0 - purity, 0.0, 0.75);
}

bool separable_from_pt(const std::array<double, 4> &pt) {
    return pt[3] >= -kTolerances.separability;
}

bool is_separable(const DensityMatrix &rho) {
    return separable_from_pt(pt_eigenvalues(rho));
}

MeasureReport measure_report(const DensityMatrix &rho, const std::array<double, 4> &pt) {
    MeasureReport r;
    r.concurrence = concurrence(rho);
    r.e_formation = ef_from_concurrence(r.concurrence);
    r.e_negative = e_negative_from_pt(pt);
    r.e_sum = e_sum_from_pt(pt);
    r.linear_entropy = linear_entropy(rho);
    r.separable = separable_from_pt(pt);
    return r;
}

MeasureReport measure_report(const DensityMatrix &rho) {
    return measure_report(rho, pt_eigenvalues(rho));
}

std::string to_csv_row(const MeasureReport &report) {
    std::string row;
    for (double v : {report.concurrence, report.e_formation, report.e_negative, report.e_sum, report.linear_entropy}) {
        row += csv::format_double(v);
        row += ',';
    }
    row += report.separable ? '1' : '0';
    return row;
}

}  // namespace entmeas
