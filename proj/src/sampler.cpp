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

#include "entmeas/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entmeas/error.hpp"

namespace entmeas {

Mat4 elementary_unitary(int i, int j, double phi, double psi, double chi) {
    if (!(1 <= i && i < j && j <= 4)) {
        throw Error(ErrorKind::kBadIndices,
                    "rotation indices must satisfy 1 <= i < j <= 4, got (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
    }
    const std::size_t a = static_cast<std::size_t>(i - 1);
    const std::size_t b = static_cast<std::size_t>(j - 1);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    Mat4 u = Mat4::identity();
    u(a, a) = c * std::polar(1.0, psi);
    u(a, b) = s * std::polar(1.0, chi);
    u(b, a) = -s * std::polar(1.0, -chi);
    u(b, b) = c * std::polar(1.0, -psi);
    return u;
}

EulerAngles angles_from_uniforms(std::span<const double, kUnitaryUniforms> xi, AngleRule rule) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    EulerAngles angles;
    std::size_t next = 0;
    for (std::size_t r = 0; r < kRotationPairs.size(); ++r) {
        Rotation &rot = angles.rotations[r];
        rot.i = kRotationPairs[r][0];
        rot.j = kRotationPairs[r][1];
        const double exponent = 1.0 / (2.0 * rot.i);
        const double u = xi[next++];
        rot.phi = rule == AngleRule::kHaar ? std::acos(std::pow(1.0 - u, exponent)) : std::asin(std::pow(u, exponent));
        rot.psi = kTwoPi * xi[next++];
        rot.chi = rot.i == 1 ? kTwoPi * xi[next++] : 0.0;
    }
    return angles;
}

Mat4 unitary_from_angles(const EulerAngles &angles) {
    Mat4 u = Mat4::identity();
    for (const Rotation &r : angles.rotations) {
        u = u * elementary_unitary(r.i, r.j, r.phi, r.psi, r.chi);
    }
    return u;
}

Mat4 random_cue_unitary(RngStream &rng, AngleRule rule) {
    std::array<double, kUnitaryUniforms> xi{};
    for (double &x : xi) {
        x = rng.uniform();
    }
    return unitary_from_angles(angles_from_uniforms(xi, rule));
}

SimplexPoint simplex_from_uniforms(std::span<const double, kSimplexUniforms> xi) {
    SimplexPoint s;
    const double p1 = 1.0 - std::cbrt(xi[0]);
    const double p2 = (1.0 - std::sqrt(xi[1])) * (1.0 - p1);
    const double p3 = (1.0 - xi[2]) * (1.0 - p1 - p2);
    const double p4 = 1.0 - p1 - p2 - p3;
    s.p = {p1, p2, p3, std::max(0.0, p4)};
    return s;
}

SimplexPoint random_simplex(RngStream &rng) {
    std::array<double, kSimplexUniforms> xi{};
    for (double &x : xi) {
        x = rng.uniform();
    }
    return simplex_from_uniforms(xi);
}

SampledState sample_state(RngStream &rng, AngleRule rule) {
    const SimplexPoint spectrum = random_simplex(rng);
    const Mat4 u = random_cue_unitary(rng, rule);
    return {DensityMatrix::from_matrix(diag_congruence(u, spectrum.p)), spectrum, u};
}

DensityMatrix random_density(RngStream &rng, AngleRule rule) {
    return sample_state(rng, rule).rho;
}

}  // namespace entmeas
