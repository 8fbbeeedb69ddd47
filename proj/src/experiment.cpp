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

#include "entmeas/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include "entmeas/csv.hpp"
#include "entmeas/error.hpp"
#include "entmeas/rng.hpp"

namespace entmeas {

double relative_difference(double a, double b) {
    if (a < 0.0 || b < 0.0) {
        throw Error(ErrorKind::kDomainError, "relative difference needs non-negative arguments", std::min(a, b));
    }
    const double sum = a + b;
    if (!(sum > 0.0)) {
        throw Error(ErrorKind::kZeroDenominator, "relative difference of two zeros", sum);
    }
    return (a - b) / sum;
}

PairComparisonRecord compare_reports(const MeasureReport &r1, const MeasureReport &r2, double tie_epsilon) {
    if (r1.separable || r2.separable) {
        throw Error(ErrorKind::kSeparableInput, "pair comparison needs two entangled states");
    }
    PairComparisonRecord rec;
    rec.first = r1;
    rec.second = r2;
    rec.d_ef = relative_difference(r1.e_formation, r2.e_formation);
    rec.d_en = relative_difference(r1.e_negative, r2.e_negative);
    rec.tie = std::abs(rec.d_ef) <= tie_epsilon || std::abs(rec.d_en) <= tie_epsilon;
    rec.violation = !rec.tie && rec.d_ef * rec.d_en < 0.0;
    rec.s = r1.linear_entropy + r2.linear_entropy;
    return rec;
}

PairComparisonRecord compare_pair(const DensityMatrix &rho1, const DensityMatrix &rho2, double tie_epsilon) {
    return compare_reports(measure_report(rho1), measure_report(rho2), tie_epsilon);
}

bool esum_violation(const PairComparisonRecord &record, double tie_epsilon) {
    const double d_sum = relative_difference(record.first.e_sum, record.second.e_sum);
    if (std::abs(d_sum) <= tie_epsilon || std::abs(record.d_ef) <= tie_epsilon) {
        return false;
    }
    return d_sum * record.d_ef < 0.0;
}

SHistogram::SHistogram(std::size_t n_bins, double lo, double hi)
    : lo_(lo), hi_(hi), pairs_(n_bins, 0), violations_(n_bins, 0) {
    if (n_bins == 0) {
        throw std::invalid_argument("histogram needs at least one bin");
    }
    if (!(hi > lo)) {
        throw std::invalid_argument("histogram range must be non-empty");
    }
}

void SHistogram::add(double s, bool violation) {
    const double n = static_cast<double>(pairs_.size());
    double pos = std::floor((s - lo_) / (hi_ - lo_) * n);
    pos = std::clamp(pos, 0.0, n - 1.0);
    const auto k = static_cast<std::size_t>(pos);
    ++pairs_[k];
    if (violation) {
        ++violations_[k];
    }
}

std::vector<HistogramBin> SHistogram::bins() const {
    const std::size_t n = pairs_.size();
    const double width = (hi_ - lo_) / static_cast<double>(n);
    std::vector<HistogramBin> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        HistogramBin &b = out[k];
        b.lo = lo_ + width * static_cast<double>(k);
        b.hi = k + 1 == n ? hi_ : lo_ + width * static_cast<double>(k + 1);
        b.pairs = pairs_[k];
        b.violations = violations_[k];
        b.empty = b.pairs == 0;
        b.rate = b.empty ? 0.0 : static_cast<double>(b.violations) / static_cast<double>(b.pairs);
    }
    return out;
}

std::vector<HistogramBin> s_histogram_bins(std::span<const PairComparisonRecord> records, std::size_t n_bins,
                                           double lo, double hi) {
    SHistogram h(n_bins, lo, hi);
    for (const PairComparisonRecord &r : records) {
        h.add(r.s, r.violation);
    }
    return h.bins();
}

namespace {

// Substreams at and above this index feed the scatter reservoirs; shards use
// indices below it.
constexpr std::uint64_t kReservoirSubstream = std::uint64_t{1} << 63;

struct ShardResult {
    std::vector<PairComparisonRecord> records;
    std::uint64_t drawn = 0;
    std::uint64_t kept = 0;
    std::uint64_t discarded = 0;
    std::uint64_t ties = 0;
};

ShardResult run_shard(const ExperimentConfig &cfg, std::uint64_t shard, std::size_t pairs_wanted) {
    ShardResult out;
    out.records.reserve(pairs_wanted);
    RngStream rng(cfg.seed, shard);
    std::optional<MeasureReport> pending;
    while (out.records.size() < pairs_wanted) {
        const DensityMatrix rho = random_density(rng, cfg.angle_rule);
        ++out.drawn;
        const std::array<double, 4> pt = pt_eigenvalues(rho);
        if (separable_from_pt(pt)) {
            ++out.discarded;
            continue;
        }
        const MeasureReport report = measure_report(rho, pt);
        if (report.e_formation <= 0.0) {
            // PT says entangled but the concurrence rounds to zero; both
            // measures must be positive for the relative differences.
            ++out.discarded;
            continue;
        }
        ++out.kept;
        if (!pending) {
            pending = report;
            continue;
        }
        PairComparisonRecord rec = compare_reports(*pending, report, cfg.tie_epsilon);
        pending.reset();
        if (rec.tie) {
            ++out.ties;
        } else {
            out.records.push_back(rec);
        }
    }
    return out;
}

class Reservoir {
   public:
    Reservoir(std::size_t capacity, std::uint64_t seed, std::uint64_t substream)
        : capacity_(capacity), rng_(seed, substream) {
        items_.reserve(capacity);
    }

    void offer(const ScatterPoint &p) {
        if (items_.size() < capacity_) {
            items_.push_back(p);
        } else {
            const auto j = static_cast<std::uint64_t>(rng_.uniform() * static_cast<double>(seen_ + 1));
            if (j < capacity_) {
                items_[j] = p;
            }
        }
        ++seen_;
    }

    std::vector<ScatterPoint> take() {
        return std::move(items_);
    }

   private:
    std::size_t capacity_;
    RngStream rng_;
    std::uint64_t seen_ = 0;
    std::vector<ScatterPoint> items_;
};

Proportion proportion(std::uint64_t hits, std::uint64_t n) {
    Proportion p;
    if (n == 0) {
        return p;
    }
    p.value = static_cast<double>(hits) / static_cast<double>(n);
    p.std_error = std::sqrt(p.value * (1.0 - p.value) / static_cast<double>(n));
    return p;
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentConfig &cfg) {
    if (cfg.n_pairs == 0) {
        throw std::invalid_argument("n_pairs must be at least 1");
    }
    if (cfg.s_bins == 0) {
        throw std::invalid_argument("s_bins must be at least 1");
    }

    ExperimentSummary summary;
    summary.config = cfg;
    summary.min_bound_margin = std::numeric_limits<double>::infinity();

    SHistogram histogram(cfg.s_bins);
    Reservoir fig1(cfg.scatter_points, cfg.seed, kReservoirSubstream + 0);
    Reservoir fig2(cfg.scatter_points, cfg.seed, kReservoirSubstream + 1);
    Reservoir fig3(cfg.scatter_points, cfg.seed, kReservoirSubstream + 2);

    const std::size_t n_shards = (cfg.n_pairs + kPairsPerShard - 1) / kPairsPerShard;
    const std::size_t wave = std::max<std::size_t>(1, cfg.threads);

    auto merge = [&](ShardResult &r) {
        summary.states_drawn += r.drawn;
        summary.states_kept += r.kept;
        summary.states_discarded += r.discarded;
        summary.ties_excluded += r.ties;
        for (const PairComparisonRecord &rec : r.records) {
            ++summary.pairs;
            histogram.add(rec.s, rec.violation);
            if (rec.violation) {
                ++summary.violations;
            }
            if (esum_violation(rec, cfg.tie_epsilon)) {
                ++summary.esum_violations;
            }
            fig1.offer({rec.d_en, rec.d_ef});
            for (const MeasureReport *m : {&rec.first, &rec.second}) {
                const double margin = m->concurrence - 2.0 * m->e_negative;
                summary.min_bound_margin = std::min(summary.min_bound_margin, margin);
                if (margin < -1e-9) {
                    ++summary.bound_violations;
                }
                summary.max_linear_entropy = std::max(summary.max_linear_entropy, m->linear_entropy);
                fig2.offer({m->e_formation, m->e_negative});
                fig3.offer({m->concurrence, m->e_negative});
            }
        }
        if (cfg.keep_records) {
            summary.records.insert(summary.records.end(), r.records.begin(), r.records.end());
        }
        r.records.clear();
        r.records.shrink_to_fit();
    };

    for (std::size_t first = 0; first < n_shards; first += wave) {
        const std::size_t count = std::min(wave, n_shards - first);
        std::vector<ShardResult> results(count);
        std::vector<std::exception_ptr> errors(count);
        auto work = [&](std::size_t k) {
            const std::size_t shard = first + k;
            const std::size_t begin = shard * kPairsPerShard;
            const std::size_t wanted = std::min(kPairsPerShard, cfg.n_pairs - begin);
            try {
                results[k] = run_shard(cfg, shard, wanted);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        };
        std::vector<std::thread> workers;
        for (std::size_t k = 1; k < count; ++k) {
            workers.emplace_back(work, k);
        }
        work(0);
        for (std::thread &t : workers) {
            t.join();
        }
        for (std::size_t k = 0; k < count; ++k) {
            if (errors[k]) {
                std::rethrow_exception(errors[k]);
            }
            merge(results[k]);
        }
    }

    summary.p_entangled = proportion(summary.states_kept, summary.states_drawn);
    summary.p_violation = proportion(summary.violations, summary.pairs);
    summary.s_histogram = histogram.bins();
    summary.scatter_def_den = fig1.take();
    summary.scatter_ef_en = fig2.take();
    summary.scatter_c_en = fig3.take();
    return summary;
}

namespace {

std::ofstream open_csv(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    return out;
}

void write_scatter(const std::filesystem::path &path, const char *header, const std::vector<ScatterPoint> &pts) {
    std::ofstream out = open_csv(path);
    out << header << '\n';
    for (const auto &[x, y] : pts) {
        out << csv::format_double(x) << ',' << csv::format_double(y) << '\n';
    }
}

}  // namespace

void write_experiment_csvs(const ExperimentSummary &s, const std::filesystem::path &dir) {
    std::filesystem::create_directories(dir);
    write_scatter(dir / "fig1.csv", "dEN,dEF", s.scatter_def_den);
    write_scatter(dir / "fig2.csv", "E_F,E_N", s.scatter_ef_en);
    write_scatter(dir / "fig3.csv", "C,E_N", s.scatter_c_en);

    {
        std::ofstream out = open_csv(dir / "fig4.csv");
        out << "bin_center,pair_count,violation_count,violation_rate\n";
        for (const HistogramBin &b : s.s_histogram) {
            out << csv::format_double(b.center()) << ',' << b.pairs << ',' << b.violations << ','
                << csv::format_double(b.rate) << '\n';
        }
    }

    std::ofstream out = open_csv(dir / "summary.csv");
    const auto row = [&](const char *key, const std::string &value) { out << key << ',' << value << '\n'; };
    const auto num = [](double v) { return csv::format_double(v); };
    out << "key,value\n";
    row("p_entangled", num(s.p_entangled.value));
    row("p_entangled_se", num(s.p_entangled.std_error));
    row("p_violation", num(s.p_violation.value));
    row("p_violation_se", num(s.p_violation.std_error));
    row("states_drawn", std::to_string(s.states_drawn));
    row("states_kept", std::to_string(s.states_kept));
    row("states_discarded", std::to_string(s.states_discarded));
    row("pairs", std::to_string(s.pairs));
    row("ties_excluded", std::to_string(s.ties_excluded));
    row("violations", std::to_string(s.violations));
    row("esum_violations", std::to_string(s.esum_violations));
    row("bound_violations", std::to_string(s.bound_violations));
    row("min_bound_margin", num(s.min_bound_margin));
    row("max_linear_entropy", num(s.max_linear_entropy));
    row("seed", std::to_string(s.config.seed));
    row("n_pairs", std::to_string(s.config.n_pairs));
    row("s_bins", std::to_string(s.config.s_bins));
    row("tie_epsilon", num(s.config.tie_epsilon));
    row("scatter_points", std::to_string(s.config.scatter_points));
    row("angle_rule", s.config.angle_rule == AngleRule::kHaar ? "haar" : "literal-arcsin");
}

}  // namespace entmeas
