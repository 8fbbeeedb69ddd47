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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entmeas/cli.hpp"
#include "entmeas/cmat.hpp"
#include "entmeas/experiment.hpp"
#include "entmeas/measures.hpp"
#include "entmeas/qstate.hpp"
#include "entmeas/sampler.hpp"
#include "entmeas/tolerances.hpp"
#include "oracles.hpp"

using namespace entmeas;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

// Shared 10^5-pair run for the violation probability and the trend.
const ExperimentSummary &big_run() {
    static const ExperimentSummary summary = [] {
        ExperimentConfig cfg;
        cfg.seed = 1;
        cfg.n_pairs = 100000;
        cfg.keep_records = true;
        return run_experiment(cfg);
    }();
    return summary;
}

Outcome entangled_fraction() {
    RngStream rng(1);
    const int n = 100000;
    int entangled = 0;
    for (int k = 0; k < n; ++k) {
        entangled += !is_separable(random_density(rng));
    }
    const double p = static_cast<double>(entangled) / n;
    const double se = std::sqrt(p * (1 - p) / n);
    return {p >= 0.355 && p <= 0.375, fmt("p_entangled = %.5f +- %.5f over %d states, band [0.355, 0.375]", p, se, n)};
}

Outcome violation_probability() {
    const ExperimentSummary &s = big_run();
    const double p = s.p_violation.value;
    int early = 0;
    for (std::size_t k = 0; k < 1000; ++k) {
        early += s.records[k].violation;
    }
    const bool ok = p >= 0.040 && p <= 0.054 && early >= 1;
    return {ok, fmt("p_violation = %.5f +- %.5f over %llu pairs, band [0.040, 0.054]; %d violations in first 1000", p,
                    s.p_violation.std_error, static_cast<unsigned long long>(s.pairs), early)};
}

Outcome werner_table() {
    double worst = 0.0;
    bool ok = true;
    for (int k = 0; k <= 10; ++k) {
        const double f = 0.5 + 0.05 * k;
        const MeasureReport r = measure_report(werner_state(WernerFidelity(f)));
        const double mu = 0.5 + std::sqrt(f * (1 - f));
        const double ef = mu >= 1.0 ? 0.0 : -mu * std::log2(mu) - (1 - mu) * std::log2(1 - mu);
        worst = std::max({worst, std::abs(r.concurrence - (2 * f - 1)), std::abs(r.e_negative - (f - 0.5)),
                          std::abs(r.e_formation - ef)});
    }
    ok = worst <= 1e-10;
    double worst_sep = 0.0;
    for (int k = 0; k < 25; ++k) {
        const double f = 0.25 + 0.01 * k;
        const MeasureReport r = measure_report(werner_state(WernerFidelity(f)));
        ok = ok && r.separable;
        worst_sep = std::max({worst_sep, r.concurrence, r.e_formation, r.e_negative, std::abs(r.e_sum)});
    }
    ok = ok && worst_sep <= 1e-10;
    return {ok, fmt("max error %.2e on F in [0.5, 1]; max measure %.2e on F in [0.25, 0.49]", worst, worst_sep)};
}

Outcome pure_states() {
    std::mt19937_64 rng(4);
    double worst_c = 0.0;
    double worst_ef = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const auto psi = oracle::haar_vector(rng);
        const MeasureReport r = measure_report(pure_state(psi));
        worst_c = std::max(worst_c, std::abs(r.concurrence - 2 * r.e_negative));
        worst_ef = std::max(worst_ef, std::abs(r.e_formation - oracle::schmidt_entropy(psi)));
    }
    return {worst_c <= 1e-9 && worst_ef <= 1e-9,
            fmt("max |C - 2E_N| = %.2e, max |E_F - S_vN| = %.2e over 10000 Haar pure states", worst_c, worst_ef)};
}

Outcome bound() {
    RngStream rng(5);
    int entangled = 0;
    double margin = 1.0;
    while (entangled < 100000) {
        const DensityMatrix rho = random_density(rng);
        if (is_separable(rho)) continue;
        ++entangled;
        margin = std::min(margin, concurrence(rho) - 2 * e_negative(rho));
    }
    return {margin >= -1e-9, fmt("min C - 2E_N = %.3e over %d entangled states", margin, entangled)};
}

Outcome concurrence_routes() {
    RngStream rng(6);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const DensityMatrix rho = random_density(rng);
        worst = std::max(worst, std::abs(concurrence(rho) - oracle::concurrence_via_product(rho.matrix())));
    }
    return {worst <= 1e-8, fmt("max route difference %.2e over 10000 states", worst)};
}

Outcome trend() {
    const ExperimentSummary &s = big_run();
    double lo = s.records.front().s;
    double hi = lo;
    for (const auto &r : s.records) {
        lo = std::min(lo, r.s);
        hi = std::max(hi, r.s);
    }
    const auto bins = s_histogram_bins(s.records, 10, lo, std::nextafter(hi, 2.0));
    const HistogramBin *bottom = nullptr;
    const HistogramBin *top = nullptr;
    for (const auto &b : bins) {
        if (b.empty) continue;
        if (!bottom) bottom = &b;
        top = &b;
    }
    const bool ok = bottom && top && top->rate > bottom->rate;
    std::string detail = fmt("S in [%.4f, %.4f]; bottom bin rate %.4f (%llu pairs), top bin rate %.4f (%llu pairs)", lo,
                             hi, bottom->rate, static_cast<unsigned long long>(bottom->pairs), top->rate,
                             static_cast<unsigned long long>(top->pairs));
    detail += fmt("; max single-state S = %.4f%s", s.max_linear_entropy,
                  s.max_linear_entropy > 0.70 ? " (exceeds 0.70, logged)" : " (<= 0.70)");
    return {ok, detail};
}

Outcome linear_algebra() {
    std::mt19937_64 rng(8);
    RngStream states(8);
    double recon = 0.0;
    double pt_inv = 0.0;
    double pt_trace = 0.0;
    double sqrt_sq = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const Mat4 a = oracle::random_matrix(rng);
        const Mat4 h = hermitian_part(a);
        const EigenDecomposition eig = hermitian_eig(h);
        recon = std::max(recon, max_abs_diff(eig.reconstruct(), h));
        pt_inv = std::max(pt_inv, max_abs_diff(partial_transpose_b(partial_transpose_b(a)), a));
        pt_trace = std::max(pt_trace, std::abs(trace(partial_transpose_b(a)) - trace(a)));
        const Mat4 rho = random_density(states).matrix();
        const Mat4 r = psd_sqrt(rho);
        sqrt_sq = std::max(sqrt_sq, max_abs_diff(r * r, rho));
    }
    const double tol = kTolerances.reconstruction;
    return {recon <= tol && pt_inv == 0.0 && pt_trace == 0.0 && sqrt_sq <= tol,
            fmt("reconstruction %.2e, PT involution %.1e, PT trace %.1e, sqrt squared %.2e over 10000 inputs", recon,
                pt_inv, pt_trace, sqrt_sq)};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const auto base = std::filesystem::temp_directory_path() / "entmeas_acceptance_determinism";
    std::filesystem::remove_all(base);
    const auto run = [&](const std::string &dir, const char *threads) {
        const std::string out = (base / dir).string();
        const char *argv[] = {"entmeas", "compare", "--seed", "7",       "--pairs",   "20000",
                              "--out",   out.c_str(), "--threads", threads};
        std::ostringstream o;
        std::ostringstream e;
        return run_cli(10, argv, o, e);
    };
    const bool ran = run("a", "1") == kExitOk && run("b", "1") == kExitOk && run("c", "4") == kExitOk;
    bool same = ran;
    int files = 0;
    for (const char *f : {"fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv", "summary.csv"}) {
        const std::string a = slurp(base / "a" / f);
        same = same && !a.empty() && a == slurp(base / "b" / f) && a == slurp(base / "c" / f);
        ++files;
    }
    std::filesystem::remove_all(base);
    return {same, fmt("%d CSVs compared across two --threads 1 runs and one --threads 4 run: %s", files,
                      same ? "byte-identical" : "differ")};
}

}  // namespace

// With an argument, runs only the criterion with that 1-based index.
int main(int argc, char **argv) {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"entangled fraction", entangled_fraction},
        {"violation probability", violation_probability},
        {"Werner table", werner_table},
        {"pure-state relations", pure_states},
        {"concurrence bound", bound},
        {"concurrence routes", concurrence_routes},
        {"violation trend", trend},
        {"linear-algebra invariants", linear_algebra},
        {"determinism", determinism},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    if (argc > 1 && (only < 1 || only > static_cast<int>(criteria.size()))) {
        std::fprintf(stderr, "criterion index must be in 1..%zu\n", criteria.size());
        return 2;
    }
    int failures = 0;
    int ran = 0;
    int index = 0;
    for (const auto &[name, check] : criteria) {
        ++index;
        if (only != 0 && index != only) {
            continue;
        }
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%d] %s: %s (%.1fs)\n", o.passed ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.passed;
    }
    std::printf("%d/%d criteria passed\n", ran - failures, ran);
    return failures == 0 ? 0 : 1;
}
