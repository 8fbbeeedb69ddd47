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
#include <span>

#include "entmeas/cmat.hpp"
#include "entmeas/qstate.hpp"
#include "entmeas/rng.hpp"

namespace entmeas {

/// How the rotation angle phi of pair (i, j) is derived from a uniform xi.
enum class AngleRule {
    /// phi = arccos((1 - xi)^(1/(2i))): sin^2(phi) ~ Beta(1, i), which makes
    /// the composed product Haar distributed on U(4).
    kHaar,
    /// phi = arcsin(xi^(1/(2i))) taken verbatim. Not Haar; kept to compare
    /// ensembles.
    kLiteralArcsin,
};

/// One elementary rotation U^(i,j)(phi, psi, chi); indices are 1-based.
struct Rotation {
    int i = 1;
    int j = 2;
    double phi = 0.0;
    double psi = 0.0;
    double chi = 0.0;
};

/// The six rotations in composition order (1,2),(2,3),(1,3),(3,4),(2,4),(1,4).
/// chi is nonzero only for pairs with i = 1.
struct EulerAngles {
    std::array<Rotation, 6> rotations{};
};

/// Pairs in composition order.
inline constexpr std::array<std::array<int, 2>, 6> kRotationPairs{{{1, 2}, {2, 3}, {1, 3}, {3, 4}, {2, 4}, {1, 4}}};

/// Uniforms consumed per unitary: (phi, psi[, chi]) per pair.
inline constexpr std::size_t kUnitaryUniforms = 15;
/// Uniforms consumed per simplex point.
inline constexpr std::size_t kSimplexUniforms = 3;

struct SimplexPoint {
    std::array<double, 4> p{};
};

/// Identity except: (i,i) = cos(phi) e^{i psi}, (i,j) = sin(phi) e^{i chi},
/// (j,i) = -sin(phi) e^{-i chi}, (j,j) = cos(phi) e^{-i psi}.
/// Throws Error(kBadIndices) unless 1 <= i < j <= 4.
Mat4 elementary_unitary(int i, int j, double phi, double psi, double chi);

EulerAngles angles_from_uniforms(std::span<const double, kUnitaryUniforms> xi, AngleRule rule = AngleRule::kHaar);

/// U(1,2) U(2,3) U(1,3) U(3,4) U(2,4) U(1,4).
Mat4 unitary_from_angles(const EulerAngles &angles);

Mat4 random_cue_unitary(RngStream &rng, AngleRule rule = AngleRule::kHaar);

/// p1 = 1 - xi1^(1/3), p2 = (1 - xi2^(1/2))(1 - p1), p3 = (1 - xi3)(1 - p1 - p2),
/// p4 = 1 - p1 - p2 - p3.
SimplexPoint simplex_from_uniforms(std::span<const double, kSimplexUniforms> xi);

SimplexPoint random_simplex(RngStream &rng);

struct SampledState {
    DensityMatrix rho;
    SimplexPoint spectrum;
    Mat4 unitary;
};

/// rho = U diag(p) U^dagger. Draw order: simplex uniforms, then unitary
/// uniforms in composition order.
SampledState sample_state(RngStream &rng, AngleRule rule = AngleRule::kHaar);

DensityMatrix random_density(RngStream &rng, AngleRule rule = AngleRule::kHaar);

}  // namespace entmeas
