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

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entmeas/cmat.hpp"

namespace entmeas {

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite
/// (each within kTolerances). The stored matrix is the exactly Hermitian part
/// of the input.
class DensityMatrix {
   public:
    /// Throws Error(kNonHermitianInput | kTraceNotOne | kNotPositiveSemidefinite)
    /// carrying the measured deviation.
    static DensityMatrix from_matrix(const Mat4 &m);

    const Mat4 &matrix() const noexcept {
        return m_;
    }

    bool operator==(const DensityMatrix &) const = default;

   private:
    explicit DensityMatrix(const Mat4 &m) : m_(m) {
    }

    Mat4 m_;
};

inline DensityMatrix density_from_matrix(const Mat4 &m) {
    return DensityMatrix::from_matrix(m);
}

/// Schmidt coefficient alpha of alpha|00> + sqrt(1 - alpha^2)|11>.
class SchmidtCoefficient {
   public:
    /// Throws Error(kParameterOutOfRange) outside [0, 1].
    explicit SchmidtCoefficient(double alpha);
    double alpha() const noexcept {
        return alpha_;
    }
    double beta() const noexcept;

   private:
    double alpha_;
};

/// Werner fidelity F in [1/4, 1].
class WernerFidelity {
   public:
    /// Throws Error(kParameterOutOfRange) outside [1/4, 1].
    explicit WernerFidelity(double f);
    double value() const noexcept {
        return f_;
    }

   private:
    double f_;
};

/// Projector onto the normalized state vector psi.
DensityMatrix pure_state(const std::array<Complex, 4> &psi);

DensityMatrix pure_schmidt(SchmidtCoefficient alpha);

/// Projector onto (|01> - |10>) / sqrt(2).
DensityMatrix singlet();

/// ((4F - 1) / 3) |psi-><psi-| + ((1 - F) / 3) * identity.
DensityMatrix werner_state(WernerFidelity f);

DensityMatrix maximally_mixed();

/// One state per line: 32 comma-separated numbers, row-major, re/im
/// interleaved, 17 significant digits.
std::string to_csv_row(const DensityMatrix &rho);

/// Parses one CSV row (Error(kParseError) on malformed input) and validates
/// it as a density matrix.
DensityMatrix density_from_csv_row(std::string_view row);

void write_states_csv(std::ostream &out, std::span<const DensityMatrix> states);

/// Reads every non-empty line not starting with '#'.
std::vector<DensityMatrix> read_states_csv(std::istream &in);

}  // namespace entmeas
