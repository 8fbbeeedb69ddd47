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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "entmeas/measures.hpp"
#include "entmeas/qstate.hpp"
#include "entmeas/sampler.hpp"

namespace entmeas {

/// (a - b) / (a + b). Throws Error(kZeroDenominator) when a + b <= 0 and
/// Error(kDomainError) for negative arguments.
double relative_difference(double a, double b);

struct PairComparisonRecord {
    MeasureReport first;
    MeasureReport second;
    double d_ef = 0.0;
    double d_en = 0.0;
    /// |d_ef| or |d_en| within the tie epsilon; never counted as a violation.
    bool tie = false;
    /// d_ef * d_en < 0 and not a tie.
    bool violation = false;
    /// S1 + S2.
    double s = 0.0;
};

/// Throws Error(kSeparableInput) unless both states are entangled.
PairComparisonRecord compare_pair(const DensityMatrix &rho1, const DensityMatrix &rho2, double tie_epsilon = 1e-12);
/// Same comparison from precomputed reports.
PairComparisonRecord compare_reports(const MeasureReport &r1, const MeasureReport &r2, double tie_epsilon = 1e-12);

/// Sign disagreement between E_F and E_sum for the pair, ties excluded.
bool esum_violation(const PairComparisonRecord &record, double tie_epsilon = 1e-12);

struct ExperimentConfig {
    std::uint64_t seed = 1;
    /// Usable (non-tie) entangled pairs to accumulate.
    std::size_t n_pairs = 100000;
    std::size_t s_bins = 30;
    double tie_epsilon = 1e-12;
    /// Worker threads; results do not depend on it.
    unsigned threads = 1;
    /// Points kept per scatter series (reservoir sampled).
    std::size_t scatter_points = 10000;
    /// Retain every record in the summary.
    bool keep_records = false;
    AngleRule angle_rule = AngleRule::kHaar;
};

/// Pairs per shard. Shard k draws from substream k of the seed, so the
/// decomposition is fixed by n_pairs alone.
inline constexpr std::size_t kPairsPerShard = 1024;

struct Proportion {
    double value = 0.0;
    /// sqrt(p (1 - p) / n).
    double std_error = 0.0;
};

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    /// violations / pairs, or 0 when empty.
    double rate = 0.0;
    bool empty = true;

    double center() const {
        return 0.5 * (lo + hi);
    }
};

/// Uniform bins over [lo, hi]; values outside are clamped into the end bins.
class SHistogram {
   public:
    SHistogram(std::size_t n_bins, double lo = 0.0, double hi = 1.5);
    void add(double s, bool violation);
    std::vector<HistogramBin> bins() const;

   private:
    double lo_;
    double hi_;
    std::vector<std::uint64_t> pairs_;
    std::vector<std::uint64_t> violations_;
};

std::vector<HistogramBin> s_histogram_bins(std::span<const PairComparisonRecord> records, std::size_t n_bins,
                                           double lo = 0.0, double hi = 1.5);

using ScatterPoint = std::pair<double, double>;

struct ExperimentSummary {
    ExperimentConfig config;
    Proportion p_entangled;
    Proportion p_violation;
    /// (dE_N, dE_F) per pair.
    std::vector<ScatterPoint> scatter_def_den;
    /// (E_F, E_N) per state.
    std::vector<ScatterPoint> scatter_ef_en;
    /// (C, E_N) per state.
    std::vector<ScatterPoint> scatter_c_en;
    std::vector<HistogramBin> s_histogram;

    std::uint64_t states_drawn = 0;
    std::uint64_t states_kept = 0;
    std::uint64_t states_discarded = 0;
    /// Usable pairs (== config.n_pairs).
    std::uint64_t pairs = 0;
    std::uint64_t ties_excluded = 0;
    std::uint64_t violations = 0;
    /// Pairs whose E_F and E_sum orderings disagree.
    std::uint64_t esum_violations = 0;
    /// States with C < 2 E_N - 1e-9.
    std::uint64_t bound_violations = 0;
    /// min over states of C - 2 E_N.
    double min_bound_margin = 0.0;
    /// Largest single-state linear entropy among kept states.
    double max_linear_entropy = 0.0;

    /// Filled only with config.keep_records.
    std::vector<PairComparisonRecord> records;
};

/// Throws std::invalid_argument for n_pairs == 0 or s_bins == 0.
ExperimentSummary run_experiment(const ExperimentConfig &cfg);

/// fig1.csv (dEN,dEF), fig2.csv (E_F,E_N), fig3.csv (C,E_N),
/// fig4.csv (bin center, pair count, violation count, violation rate),
/// summary.csv (key,value). Creates `dir` if needed.
void write_experiment_csvs(const ExperimentSummary &summary, const std::filesystem::path &dir);

}  // namespace entmeas
