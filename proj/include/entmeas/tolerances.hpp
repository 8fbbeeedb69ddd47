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

namespace entmeas {

/// Every numerical threshold used by the library. Tests read the same record.
struct Tolerances {
    /// max |m - m^dagger| accepted as Hermitian.
    double hermiticity = 1e-10;
    /// Eigenvalues in [-psd_clamp, 0) are clamped to zero.
    double psd_clamp = 1e-10;
    /// |tr(rho) - 1| accepted for a density matrix.
    double trace = 1e-10;
    /// Reconstruction / squaring checks (max-abs entrywise).
    double reconstruction = 1e-9;
    /// Eigenvalues below eig_noise_floor * max(1, max|lambda|) are at the
    /// backward-error level of the eigensolver and are treated as exact zeros
    /// before square-rooting.
    double eig_noise_floor = 1e-14;
    /// Jacobi stops when the off-diagonal Frobenius norm drops below
    /// jacobi_off_diagonal * max(1, |A|_F).
    double jacobi_off_diagonal = 1e-13;
    int jacobi_max_sweeps = 100;
    /// Minimum partial-transpose eigenvalue above -separability is PPT.
    double separability = 1e-10;
    /// Slack on [0, 1] domains before raising DomainError; values inside the
    /// slack are clamped.
    double domain_slack = 1e-12;
};

inline constexpr Tolerances kTolerances{};

}  // namespace entmeas
