#include "pril/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "pril/baselines.hpp"
#include "pril/mpril.hpp"
#include "pril/pril.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pril {

namespace {

// Sub-stream tags for one repeat; see the RunConfig contract.
constexpr std::uint64_t kPhaseGenerate = 0;
constexpr std::uint64_t kPhaseLabels = 1;
constexpr std::uint64_t kPhaseShuffle = 2;

struct RepeatTrace {
    std::vector<double> primary;
    std::vector<double> strict;
};

void validate_config(const RunConfig& cfg) {
    if (cfg.rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    if (cfg.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (cfg.algorithm == Algorithm::KernelPril) {
        if (!cfg.kernel) throw std::invalid_argument("kernel-pril needs a kernel");
        if (cfg.kernel->kind == Kernel::Kind::Poly && cfg.kernel->degree < 1) {
            throw std::invalid_argument("polynomial kernel degree must be >= 1");
        }
    } else if (cfg.kernel) {
        throw std::invalid_argument("a kernel is only meaningful for kernel-pril");
    }
    if (trains_on_intervals(cfg.algorithm) && cfg.remix_labels) {
        if (!(cfg.fraction_partial >= 0.0 && cfg.fraction_partial <= 1.0)) {
            throw std::invalid_argument("fraction of partial labels must lie in [0, 1]");
        }
        if (cfg.label_type != 1 && cfg.label_type != 2) {
            throw std::invalid_argument("interval label type must be 1 or 2");
        }
    }
    if (cfg.algorithm == Algorithm::MPril && !(cfg.eta > 0.0)) {
        throw std::invalid_argument("learning rate eta must be > 0");
    }
    if (cfg.algorithm == Algorithm::WidrowHoff && cfg.lr < 0.0) {
        throw std::invalid_argument("learning rate must be >= 0");
    }
    if (cfg.dataset == DatasetKind::File && cfg.dataset_path.empty()) {
        throw std::invalid_argument("file dataset needs a path");
    }
}

RepeatTrace run_repeat(const RunConfig& cfg, const LabeledDataset* shared, int r) {
    const std::uint64_t s = cfg.seed ^ static_cast<std::uint64_t>(r);

    LabeledDataset generated;
    const LabeledDataset* base = shared;
    if (cfg.dataset == DatasetKind::Synth) {
        std::size_t n = cfg.synth_n ? cfg.synth_n : static_cast<std::size_t>(cfg.rounds);
        generated = synth_generate(n, Rng::sub_seed(s, kPhaseGenerate));
        base = &generated;
    }

    LabeledDataset labeled;
    const LabeledDataset* ds = base;
    if (trains_on_intervals(cfg.algorithm) && cfg.remix_labels) {
        Rng label_rng(Rng::sub_seed(s, kPhaseLabels));
        labeled = mix_partial(*base, cfg.fraction_partial, cfg.label_type, label_rng);
        ds = &labeled;
    }

    Rng shuffle_rng(Rng::sub_seed(s, kPhaseShuffle));
    const std::vector<std::size_t> perm = shuffle_rng.permutation(ds->size());
    const std::size_t n = ds->size();
    const int t_total = cfg.rounds;
    const int d = ds->dim();
    const int k = ds->k;
    const bool exact_eval = cfg.eval == EvalMode::Exact;

    RepeatTrace tr;
    tr.primary.assign(static_cast<std::size_t>(t_total), 0.0);
    const bool want_strict = trains_on_intervals(cfg.algorithm) && !exact_eval;
    if (want_strict) tr.strict.assign(static_cast<std::size_t>(t_total), 0.0);

    switch (cfg.algorithm) {
        case Algorithm::Pril: {
            LinearRankModel m = pril_init(d, k);
            for (int t = 0; t < t_total; ++t) {
                std::size_t i = perm[static_cast<std::size_t>(t) % n];
                double score = dot(m.w, ds->instances[i]);
                if (exact_eval) {
                    tr.primary[t] = std::abs(predict_rank(score, m.theta) - ds->true_ranks[i]);
                } else {
                    tr.strict[t] = mae_interval_loss(score, m.theta, ds->intervals[i]);
                }
                PrilStep step = pril_update(m, ds->instances[i], ds->intervals[i]);
                if (!exact_eval) tr.primary[t] = step.pre_loss_mae;
            }
            break;
        }
        case Algorithm::KernelPril: {
            DualRankModel m = kpril_init(d, k, *cfg.kernel);
            for (int t = 0; t < t_total; ++t) {
                std::size_t i = perm[static_cast<std::size_t>(t) % n];
                double score = dual_score(m, ds->instances[i]);
                if (exact_eval) {
                    tr.primary[t] = std::abs(predict_rank(score, m.theta) - ds->true_ranks[i]);
                } else {
                    tr.strict[t] = mae_interval_loss(score, m.theta, ds->intervals[i]);
                }
                PrilStep step = kpril_update(m, ds->instances[i], ds->intervals[i]);
                if (!exact_eval) tr.primary[t] = step.pre_loss_mae;
            }
            break;
        }
        case Algorithm::MPril: {
            MultiplicativeModel m = mpril_init(d, k, cfg.eta);
            for (int t = 0; t < t_total; ++t) {
                std::size_t i = perm[static_cast<std::size_t>(t) % n];
                double score = dot(m.w, ds->instances[i]);
                if (exact_eval) {
                    tr.primary[t] = std::abs(predict_rank(score, m.theta) - ds->true_ranks[i]);
                } else {
                    tr.strict[t] = mae_interval_loss(score, m.theta, ds->intervals[i]);
                }
                PrilStep step = mpril_update(m, ds->instances[i], ds->intervals[i]);
                if (!exact_eval) tr.primary[t] = step.pre_loss_mae;
            }
            break;
        }
        case Algorithm::PRank: {
            LinearRankModel m = pril_init(d, k);
            for (int t = 0; t < t_total; ++t) {
                std::size_t i = perm[static_cast<std::size_t>(t) % n];
                int pred = predict_rank(dot(m.w, ds->instances[i]), m.theta);
                tr.primary[t] = std::abs(pred - ds->true_ranks[i]);
                prank_update(m, ds->instances[i], ds->true_ranks[i]);
            }
            break;
        }
        case Algorithm::WidrowHoff: {
            WidrowHoffModel m = wh_init(d, k, cfg.lr);
            for (int t = 0; t < t_total; ++t) {
                std::size_t i = perm[static_cast<std::size_t>(t) % n];
                double pred = wh_update(m, ds->instances[i], ds->true_ranks[i]);
                tr.primary[t] = std::abs(round_clip(pred, k) - ds->true_ranks[i]);
            }
            break;
        }
        case Algorithm::MultiClassPerceptron: {
            MultiClassPerceptron m = mcp_init(d, k);
            for (int t = 0; t < t_total; ++t) {
                std::size_t i = perm[static_cast<std::size_t>(t) % n];
                int pred = mcp_update(m, ds->instances[i], ds->true_ranks[i]);
                tr.primary[t] = std::abs(pred - ds->true_ranks[i]);
            }
            break;
        }
    }
    return tr;
}

std::FILE* open_or_throw(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

}  // namespace

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "pril") return Algorithm::Pril;
    if (name == "kernel-pril") return Algorithm::KernelPril;
    if (name == "mpril") return Algorithm::MPril;
    if (name == "prank") return Algorithm::PRank;
    if (name == "widrow-hoff") return Algorithm::WidrowHoff;
    if (name == "mc-perceptron" || name == "mcp") return Algorithm::MultiClassPerceptron;
    throw std::invalid_argument(
        "unknown algorithm '" + name +
        "' (expected pril, kernel-pril, mpril, prank, widrow-hoff, mc-perceptron)");
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Pril: return "pril";
        case Algorithm::KernelPril: return "kernel-pril";
        case Algorithm::MPril: return "mpril";
        case Algorithm::PRank: return "prank";
        case Algorithm::WidrowHoff: return "widrow-hoff";
        case Algorithm::MultiClassPerceptron: return "mc-perceptron";
    }
    return "?";
}

bool trains_on_intervals(Algorithm a) {
    return a == Algorithm::Pril || a == Algorithm::KernelPril || a == Algorithm::MPril;
}

MetricSeries run_experiment(const RunConfig& cfg) {
    validate_config(cfg);
    LabeledDataset loaded;
    const LabeledDataset* shared = nullptr;
    if (cfg.dataset == DatasetKind::File) {
        loaded = load_dataset(cfg.dataset_path, cfg.k_override, cfg.csv);
        shared = &loaded;
    }

    const int repeats = cfg.repeats;
    std::vector<RepeatTrace> traces(static_cast<std::size_t>(repeats));
    if (cfg.workers == 1) {
        for (int r = 0; r < repeats; ++r) traces[r] = run_repeat(cfg, shared, r);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.workers)
        for (int r = 0; r < repeats; ++r) traces[r] = run_repeat(cfg, shared, r);
#else
        for (int r = 0; r < repeats; ++r) traces[r] = run_repeat(cfg, shared, r);
#endif
    }

    const int t_total = cfg.rounds;
    MetricSeries out;
    out.values.assign(static_cast<std::size_t>(t_total), 0.0);
    const bool with_strict = trains_on_intervals(cfg.algorithm) && cfg.eval == EvalMode::Interval;
    if (with_strict) out.values_strict.assign(static_cast<std::size_t>(t_total), 0.0);
    std::vector<double> finals(static_cast<std::size_t>(repeats), 0.0);
    for (int r = 0; r < repeats; ++r) {
        double cum = 0.0, cum_strict = 0.0;
        for (int t = 0; t < t_total; ++t) {
            cum += traces[r].primary[t];
            out.values[t] += cum / static_cast<double>(t + 1);
            if (with_strict) {
                cum_strict += traces[r].strict[t];
                out.values_strict[t] += cum_strict / static_cast<double>(t + 1);
            }
        }
        finals[r] = cum / static_cast<double>(t_total);
    }
    for (double& v : out.values) v /= static_cast<double>(repeats);
    for (double& v : out.values_strict) v /= static_cast<double>(repeats);
    double mean = 0.0;
    for (double f : finals) mean += f;
    mean /= static_cast<double>(repeats);
    double var = 0.0;
    for (double f : finals) var += (f - mean) * (f - mean);
    out.final_mean = mean;
    out.final_std = std::sqrt(var / static_cast<double>(repeats));
    return out;
}

SweepResult sweep_fractions(const RunConfig& cfg, const std::vector<double>& fractions) {
    if (fractions.empty()) throw std::invalid_argument("sweep needs at least one fraction");
    SweepResult res;
    res.fractions = fractions;
    for (double f : fractions) {
        RunConfig c = cfg;
        c.remix_labels = true;
        c.fraction_partial = f;
        res.series.push_back(run_experiment(c));
    }
    return res;
}

CompareResult compare_algorithms(const RunConfig& cfg, const std::vector<Algorithm>& algorithms) {
    if (algorithms.empty()) throw std::invalid_argument("compare needs at least one algorithm");
    CompareResult res;
    res.algorithms = algorithms;
    for (Algorithm a : algorithms) {
        RunConfig c = cfg;
        c.algorithm = a;
        c.eval = EvalMode::Exact;
        if (a == Algorithm::KernelPril) {
            c.kernel = cfg.kernel ? *cfg.kernel : Kernel{};
        } else {
            c.kernel.reset();
        }
        if (trains_on_intervals(a)) {
            c.remix_labels = true;
            c.fraction_partial = 1.0;
        }
        res.series.push_back(run_experiment(c));
    }
    return res;
}

LabeledDataset load_dataset(const std::string& path, int k_override, const CsvLoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string first;
    std::getline(in, first);
    in.close();
    while (!first.empty() && (first.back() == '\r' || first.back() == ' ' || first.back() == '\t')) {
        first.pop_back();
    }
    const std::string tail = "y_true,y_lo,y_hi,is_partial";
    const bool exchange = first.size() >= tail.size() &&
                          first.compare(first.size() - tail.size(), tail.size(), tail) == 0;
    LabeledDataset ds;
    if (exchange) {
        const bool opts_set = !opts.target_column.empty() || !opts.bin_edges.empty() ||
                              opts.equal_width_bins != 0 || opts.normalize || opts.one_hot;
        if (opts_set) {
            throw std::invalid_argument(
                "CSV shaping options do not apply to a dataset file with label columns");
        }
        ds = read_dataset_csv(path, k_override);
    } else {
        ds = load_ordinal_csv(path, opts);
        if (k_override > 0) {
            if (k_override < ds.k) {
                throw std::invalid_argument("k override is smaller than the ranks present");
            }
            ds.k = k_override;
        }
    }
    return ds;
}

void write_series_csv(const MetricSeries& series, const std::string& path) {
    std::FILE* f = open_or_throw(path);
    const bool with_strict = !series.values_strict.empty();
    std::fprintf(f, with_strict ? "round,avg_mae,avg_mae_strict\n" : "round,avg_mae\n");
    for (std::size_t t = 0; t < series.values.size(); ++t) {
        if (with_strict) {
            std::fprintf(f, "%zu,%.17g,%.17g\n", t + 1, series.values[t], series.values_strict[t]);
        } else {
            std::fprintf(f, "%zu,%.17g\n", t + 1, series.values[t]);
        }
    }
    std::fclose(f);
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
    std::FILE* f = open_or_throw(path);
    std::fprintf(f, "fraction,round,avg_mae\n");
    for (std::size_t b = 0; b < result.fractions.size(); ++b) {
        for (std::size_t t = 0; t < result.series[b].values.size(); ++t) {
            std::fprintf(f, "%g,%zu,%.17g\n", result.fractions[b], t + 1, result.series[b].values[t]);
        }
    }
    std::fclose(f);
}

void write_compare_csv(const CompareResult& result, const std::string& path) {
    std::FILE* f = open_or_throw(path);
    std::fprintf(f, "algorithm,round,avg_mae\n");
    for (std::size_t b = 0; b < result.algorithms.size(); ++b) {
        const std::string name = algorithm_name(result.algorithms[b]);
        for (std::size_t t = 0; t < result.series[b].values.size(); ++t) {
            std::fprintf(f, "%s,%zu,%.17g\n", name.c_str(), t + 1, result.series[b].values[t]);
        }
    }
    std::fclose(f);
}

void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
    std::FILE* f = open_or_throw(path);
    for (const auto& [key, value] : entries) {
        std::fprintf(f, "%s=%s\n", key.c_str(), value.c_str());
    }
    std::fclose(f);
}

}  // namespace pril
