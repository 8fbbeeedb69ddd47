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
#include <string>

#include "entmeas/cmat.hpp"
#include "entmeas/qstate.hpp"

namespace entmeas {

/// Every entanglement quantity of one state.
struct MeasureReport {
    double concurrence = 0.0;
    double e_formation = 0.0;
    /// Modulus of the most negative partial-transpose eigenvalue.
    double e_negative = 0.0;
    /// sum |PT eigenvalues| - 1.
    double e_sum = 0.0;
    double linear_entropy = 0.0;
    bool separable = true;
};

/// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y).
Mat4 spin_flip(const DensityMatrix &rho);

/// Descending eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)).
std::array<double, 4> r_eigenvalues(const DensityMatrix &rho);

/// max(0, l1 - l2 - l3 - l4) over r_eigenvalues, clamped to [0, 1].
double concurrence(const DensityMatrix &rho);
double concurrence_from_r_eigenvalues(const std::array<double, 4> &lambda);

/// -x log2 x - (1 - x) log2(1 - x), with 0 log 0 = 0. Throws
/// Error(kDomainError) outside [0, 1] by more than kTolerances.domain_slack.
double binary_entropy(double x);

/// h((1 + sqrt(1 - C^2)) / 2). Throws Error(kDomainError) for C outside [0, 1].
double ef_from_concurrence(double c);

double e_formation(const DensityMatrix &rho);

/// Descending eigenvalues of the partial transpose over qubit B.
std::array<double, 4> pt_eigenvalues(const DensityMatrix &rho);

double e_negative(const DensityMatrix &rho);
double e_negative_from_pt(const std::array<double, 4> &pt);

double e_sum(const DensityMatrix &rho);
double e_sum_from_pt(const std::array<double, 4> &pt);

/// 1 - tr(rho^2).
double linear_entropy(const DensityMatrix &rho);

/// Peres-Horodecki: min PT eigenvalue >= -kTolerances.separability.
bool is_separable(const DensityMatrix &rho);
bool separable_from_pt(const std::array<double, 4> &pt);

/// Shares one PT eigendecomposition and one R spectrum across all fields.
MeasureReport measure_report(const DensityMatrix &rho);
/// Same, reusing an already computed PT spectrum.
MeasureReport measure_report(const DensityMatrix &rho, const std::array<double, 4> &pt);

inline constexpr const char *kMeasureCsvHeader = "C,E_F,E_N,E_sum,S,separable";

/// C, E_F, E_N, E_sum, S, separable (0/1); 17 significant digits.
std::string to_csv_row(const MeasureReport &report);

}  // namespace entmeas
