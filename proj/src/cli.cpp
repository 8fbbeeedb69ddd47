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

#include "entmeas/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "entmeas/csv.hpp"
#include "entmeas/error.hpp"
#include "entmeas/experiment.hpp"
#include "entmeas/measures.hpp"
#include "entmeas/qstate.hpp"
#include "entmeas/rng.hpp"
#include "entmeas/sampler.hpp"
#include "entmeas/selftest.hpp"

namespace entmeas {

namespace {

/// Raised for problems with the invocation rather than the numerics.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MeasureArgs {
    std::string family;
    std::optional<double> param;
    std::string input;
};

struct SampleArgs {
    std::uint64_t seed = 1;
    std::size_t count = 10;
    std::string out;
};

struct CompareArgs {
    std::uint64_t seed = 1;
    std::size_t pairs = 100000;
    std::size_t bins = 30;
    std::string out = ".";
    unsigned threads = 1;
};

struct WernerArgs {
    double from = 0.25;
    double to = 1.0;
    double step = 0.05;
};

struct SelftestArgs {
    std::size_t samples = 1000;
    std::uint64_t seed = 2024;
};

DensityMatrix family_state(const MeasureArgs &a) {
    if (a.family == "singlet") {
        return singlet();
    }
    if (!a.param) {
        throw UsageError("--family " + a.family + " needs --param");
    }
    if (a.family == "werner") {
        return werner_state(WernerFidelity(*a.param));
    }
    return pure_schmidt(SchmidtCoefficient(*a.param));
}

int cmd_measure(const MeasureArgs &a, std::ostream &out) {
    std::vector<DensityMatrix> states;
    if (!a.input.empty()) {
        std::ifstream in(a.input);
        if (!in) {
            throw UsageError("cannot read " + a.input);
        }
        states = read_states_csv(in);
    } else if (!a.family.empty()) {
        states.push_back(family_state(a));
    } else {
        throw UsageError("measure needs --family or --input");
    }
    out << kMeasureCsvHeader << '\n';
    for (const DensityMatrix &rho : states) {
        out << to_csv_row(measure_report(rho)) << '\n';
    }
    return kExitOk;
}

int cmd_sample(const SampleArgs &a, std::ostream &out) {
    RngStream rng(a.seed);
    std::ofstream file;
    std::ostream *sink = &out;
    if (!a.out.empty()) {
        file.open(a.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw UsageError("cannot write " + a.out);
        }
        sink = &file;
    }
    for (std::size_t k = 0; k < a.count; ++k) {
        *sink << to_csv_row(random_density(rng)) << '\n';
    }
    return kExitOk;
}

int cmd_compare(const CompareArgs &a, std::ostream &out) {
    ExperimentConfig cfg;
    cfg.seed = a.seed;
    cfg.n_pairs = a.pairs;
    cfg.s_bins = a.bins;
    cfg.threads = a.threads;
    const ExperimentSummary s = run_experiment(cfg);
    write_experiment_csvs(s, a.out);
    out << "p_entangled," << csv::format_double(s.p_entangled.value) << ','
        << csv::format_double(s.p_entangled.std_error) << '\n';
    out << "p_violation," << csv::format_double(s.p_violation.value) << ','
        << csv::format_double(s.p_violation.std_error) << '\n';
    return kExitOk;
}

int cmd_werner_table(const WernerArgs &a, std::ostream &out) {
    if (!(a.step > 0.0) || a.to < a.from) {
        throw UsageError("werner-table needs --step > 0 and --from <= --to");
    }
    out << "F,C,E_F,E_N,E_sum\n";
    const auto steps = static_cast<long>(std::floor((a.to - a.from) / a.step + 1e-9));
    for (long k = 0; k <= steps; ++k) {
        const double f = std::min(a.from + static_cast<double>(k) * a.step, a.to);
        const MeasureReport r = measure_report(werner_state(WernerFidelity(f)));
        out << csv::format_double(f) << ',' << csv::format_double(r.concurrence) << ','
            << csv::format_double(r.e_formation) << ',' << csv::format_double(r.e_negative) << ','
            << csv::format_double(r.e_sum) << '\n';
    }
    return kExitOk;
}

int cmd_selftest(const SelftestArgs &a, std::ostream &out) {
    bool all = true;
    for (const SuiteResult &r : run_selftest(a.samples, a.seed)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) {
            out << ": " << r.detail;
        }
        out << '\n';
        all = all && r.passed;
    }
    return all ? kExitOk : kExitNumerical;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-qubit entanglement measures: evaluation, sampling and ordering comparison", "entmeas"};
    app.require_subcommand(1);

    MeasureArgs measure_args;
    auto *measure = app.add_subcommand("measure", "Print the measure report of a named state or a state file");
    measure->add_option("--family", measure_args.family, "Named state family")
        ->check(CLI::IsMember({"werner", "pure", "singlet"}));
    measure->add_option("--param", measure_args.param, "Werner fidelity F, or Schmidt coefficient alpha");
    measure->add_option("--input", measure_args.input, "State CSV file (32 numbers per row)")
        ->excludes("--family");

    SampleArgs sample_args;
    auto *sample = app.add_subcommand("sample", "Draw random density matrices as state CSV rows");
    sample->add_option("--seed", sample_args.seed, "RNG seed");
    sample->add_option("--count", sample_args.count, "Number of states")->check(CLI::NonNegativeNumber);
    sample->add_option("--out", sample_args.out, "Output file (default: stdout)");

    CompareArgs compare_args;
    auto *compare = app.add_subcommand("compare", "Monte Carlo ordering comparison; writes fig1-4 and summary CSVs");
    compare->add_option("--seed", compare_args.seed, "RNG seed");
    compare->add_option("--pairs", compare_args.pairs, "Entangled pairs to accumulate")->check(CLI::PositiveNumber);
    compare->add_option("--bins", compare_args.bins, "Linear-entropy histogram bins")->check(CLI::PositiveNumber);
    compare->add_option("--out", compare_args.out, "Output directory");
    compare->add_option("--threads", compare_args.threads, "Worker threads")->check(CLI::PositiveNumber);

    WernerArgs werner_args;
    auto *werner = app.add_subcommand("werner-table", "Measures of Werner states over a grid of F");
    werner->add_option("--from", werner_args.from, "First F")->check(CLI::Range(0.25, 1.0));
    werner->add_option("--to", werner_args.to, "Last F")->check(CLI::Range(0.25, 1.0));
    werner->add_option("--step", werner_args.step, "Grid step");

    SelftestArgs selftest_args;
    auto *selftest = app.add_subcommand("selftest", "Run the invariant suites");
    selftest->add_option("--samples", selftest_args.samples, "Random inputs per suite");
    selftest->add_option("--seed", selftest_args.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*measure) {
            return cmd_measure(measure_args, out);
        }
        if (*sample) {
            return cmd_sample(sample_args, out);
        }
        if (*compare) {
            return cmd_compare(compare_args, out);
        }
        if (*werner) {
            return cmd_werner_table(werner_args, out);
        }
        return cmd_selftest(selftest_args, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::kParseError || e.kind() == ErrorKind::kParameterOutOfRange ? kExitUsage
                                                                                                    : kExitNumerical;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace entmeas
