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

#include "entmeas/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "entmeas/cmat.hpp"
#include "entmeas/measures.hpp"
#include "entmeas/qstate.hpp"
#include "entmeas/rng.hpp"
#include "entmeas/sampler.hpp"
#include "entmeas/simd/kernels.hpp"
#include "entmeas/tolerances.hpp"

namespace entmeas {

namespace {

Mat4 random_matrix(RngStream &rng) {
    Mat4 m;
    for (Complex &z : m.e) {
        z = Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    }
    return m;
}

// A suite returns an empty string on success, or a description of the first
// failure.
using Suite = std::function<std::string(RngStream &, std::size_t)>;

std::string describe(const char *what, double got, double limit) {
    std::ostringstream os;
    os << what << ": " << got << " (limit " << limit << ")";
    return os.str();
}

std::string eig_suite(RngStream &rng, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const Mat4 a = random_matrix(rng);
        const Mat4 h = a + adjoint(a);
        const EigenDecomposition eig = hermitian_eig(h);
        const double rec = max_abs_diff(eig.reconstruct(), h);
        if (rec > 1e-10) {
            return describe("reconstruction", rec, 1e-10);
        }
        const double orth = max_abs_diff(adjoint(eig.vectors) * eig.vectors, Mat4::identity());
        if (orth > 1e-10) {
            return describe("U^dagger U - I", orth, 1e-10);
        }
        const double sum = eig.values[0] + eig.values[1] + eig.values[2] + eig.values[3];
        if (std::abs(sum - trace(h).real()) > 1e-10) {
            return describe("sum of eigenvalues - trace", std::abs(sum - trace(h).real()), 1e-10);
        }
        if (!std::is_sorted(eig.values.rbegin(), eig.values.rend())) {
            return "eigenvalues not descending";
        }
    }
    return {};
}

std::string pt_suite(RngStream &rng, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const Mat4 m = random_matrix(rng);
        const Mat4 pt = partial_transpose_b(m);
        if (!(partial_transpose_b(pt) == m)) {
            return "partial transpose is not an exact involution";
        }
        if (trace(pt) != trace(m)) {
            return "partial transpose changed the trace";
        }
    }
    return {};
}

std::string sqrt_suite(RngStream &rng, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const Mat4 a = random_matrix(rng);
        Mat4 p = a * adjoint(a);
        p = (1.0 / trace(p).real()) * p;
        const Mat4 s = psd_sqrt(p);
        const double err = max_abs_diff(s * s, p);
        if (err > kTolerances.reconstruction) {
            return describe("sqrt(m)^2 - m", err, kTolerances.reconstruction);
        }
    }
    return {};
}

std::string werner_suite(RngStream &, std::size_t) {
    for (int k = 0; k <= 50; ++k) {
        const double f = 0.5 + 0.01 * k;
        const DensityMatrix rho = werner_state(WernerFidelity(f));
        const MeasureReport r = measure_report(rho);
        const double mu = 0.5 + std::sqrt(f * (1.0 - f));
        const double ef = -mu * std::log2(mu) - (1.0 - mu) * std::log2(1.0 - mu);
        const double dc = std::abs(r.concurrence - (2.0 * f - 1.0));
        const double dn = std::abs(r.e_negative - (f - 0.5));
        const double df = std::abs(r.e_formation - ef);
        if (std::max({dc, dn, df}) > 1e-10) {
            return describe("Werner closed-form mismatch", std::max({dc, dn, df}), 1e-10);
        }
    }
    return {};
}

std::array<Complex, 4> haar_vector(RngStream &rng) {
    const Mat4 u = random_cue_unitary(rng);
    return {u(0, 0), u(1, 0), u(2, 0), u(3, 0)};
}

std::string pure_suite(RngStream &rng, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const DensityMatrix rho = pure_state(haar_vector(rng));
        const MeasureReport r = measure_report(rho);
        const double d = std::abs(r.concurrence - 2.0 * r.e_negative);
        if (d > 1e-9) {
            return describe("|C - 2 E_N| on a pure state", d, 1e-9);
        }
        if (r.linear_entropy > 1e-12) {
            return describe("linear entropy of a pure state", r.linear_entropy, 1e-12);
        }
    }
    return {};
}

std::string sampler_suite(RngStream &rng, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const SampledState s = sample_state(rng);
        std::array<double, 4> p = s.spectrum.p;
        std::sort(p.rbegin(), p.rend());
        const auto ev = hermitian_eigenvalues(s.rho.matrix());
        for (std::size_t i = 0; i < 4; ++i) {
            if (std::abs(ev[i] - p[i]) > 1e-10) {
                return describe("spectrum preservation", std::abs(ev[i] - p[i]), 1e-10);
            }
        }
        const double unit = max_abs_diff(adjoint(s.unitary) * s.unitary, Mat4::identity());
        if (unit > 1e-12) {
            return describe("U^dagger U - I", unit, 1e-12);
        }
    }
    RngStream a(rng.next_u64()), b(a.seed());
    for (std::size_t k = 0; k < std::min<std::size_t>(n, 100); ++k) {
        if (!(random_density(a) == random_density(b))) {
            return "equal seeds produced different states";
        }
    }
    return {};
}

std::string measures_suite(RngStream &rng, std::size_t n) {
    const double eps = kTolerances.separability;
    for (std::size_t k = 0; k < n; ++k) {
        const DensityMatrix rho = random_density(rng);
        const MeasureReport r = measure_report(rho);
        if (r.concurrence < 2.0 * r.e_negative - 1e-9) {
            return describe("C - 2 E_N", r.concurrence - 2.0 * r.e_negative, -1e-9);
        }
        const bool by_en = r.e_negative <= eps;
        const bool by_sum = r.e_sum <= 4.0 * eps;
        if (r.separable != by_en || r.separable != by_sum) {
            return "separability, E_N and E_sum disagree";
        }
    }
    return {};
}

std::string simd_suite(RngStream &rng, std::size_t n) {
    const auto &ref = simd::kernels(simd::Isa::kScalar);
    for (simd::Isa isa : simd::supported_isas()) {
        const auto &k = simd::kernels(isa);
        for (std::size_t t = 0; t < n; ++t) {
            const Mat4 a = random_matrix(rng), b = random_matrix(rng);
            const std::array<double, 4> d{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
            Mat4 x, y;
            ref.mul(a.data(), b.data(), x.data());
            k.mul(a.data(), b.data(), y.data());
            if (!(x == y)) {
                return std::string(simd::isa_name(isa)) + " mul differs from scalar";
            }
            ref.diag_congruence(a.data(), d.data(), x.data());
            k.diag_congruence(a.data(), d.data(), y.data());
            if (!(x == y)) {
                return std::string(simd::isa_name(isa)) + " diag_congruence differs from scalar";
            }
            const double r[8] = {d[0], d[1], d[2], d[3], -d[1], d[0], d[3], -d[2]};
            x = a;
            y = a;
            ref.rotate_rows(x.data(), 0, 2, r);
            k.rotate_rows(y.data(), 0, 2, r);
            if (!(x == y)) {
                return std::string(simd::isa_name(isa)) + " rotate_rows differs from scalar";
            }
        }
    }
    return {};
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::size_t samples, std::uint64_t seed) {
    const std::vector<std::pair<const char *, Suite>> suites = {
        {"cmat.hermitian_eig", eig_suite},
        {"cmat.partial_transpose_b", pt_suite},
        {"cmat.psd_sqrt", sqrt_suite},
        {"simd.equivalence", simd_suite},
        {"qstate+measures.werner_closed_form", werner_suite},
        {"measures.pure_state_connection", pure_suite},
        {"measures.bound_and_separability", measures_suite},
        {"sampler.spectrum_unitarity_determinism", sampler_suite},
    };
    std::vector<SuiteResult> results;
    std::uint64_t substream = 0;
    for (const auto &[name, suite] : suites) {
        RngStream rng(seed, substream++);
        SuiteResult r{name, false, {}};
        try {
            r.detail = suite(rng, samples);
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.detail = std::string("threw: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace entmeas
