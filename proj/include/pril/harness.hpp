#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pril/datagen.hpp"
#include "pril/kernel_pril.hpp"

namespace pril {

enum class Algorithm { Pril, KernelPril, MPril, PRank, WidrowHoff, MultiClassPerceptron };

// Canonical names: pril, kernel-pril, mpril, prank, widrow-hoff,
// mc-perceptron (alias: mcp).
Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);

// True for the learners that consume interval labels; the baselines train
// on exact ranks only.
bool trains_on_intervals(Algorithm a);

// Interval: charge each trial its violated-constraint count against the
// shown interval (strict indicator loss recorded alongside). Exact: charge
// |predicted rank - true rank|. Baselines are always scored the exact way.
enum class EvalMode { Interval, Exact };

enum class DatasetKind { Synth, File };

// One experiment: an algorithm, a data source, and a repeat protocol.
//
// Repeat r of a run with seed s derives everything from s ^ r: phase 0
// seeds synthetic generation, phase 1 interval labeling, phase 2 the
// stream shuffle (Rng::sub_seed). A stream longer than the dataset cycles
// the shuffled order. Results are invariant to workers by construction:
// each repeat fills its own slot and aggregation walks repeats in index
// order.
struct RunConfig {
    Algorithm algorithm = Algorithm::Pril;
    std::optional<Kernel> kernel;  // required iff algorithm is KernelPril
    DatasetKind dataset = DatasetKind::Synth;
    std::string dataset_path;      // File only
    int k_override = 0;            // File only; 0 infers from the data
    CsvLoadOptions csv;            // File only, for raw ordinal CSVs
    std::size_t synth_n = 0;       // Synth dataset size; 0 means rounds
    double fraction_partial = 1.0;
    int label_type = 1;
    bool remix_labels = true;      // false: keep the dataset's stored intervals
    int rounds = 2000;
    int repeats = 10;
    std::uint64_t seed = 0;
    double eta = 0.1;              // MPril
    double lr = 0.1;               // WidrowHoff
    EvalMode eval = EvalMode::Interval;
    int workers = 1;
};

// Cumulative average loss per round, averaged pointwise over repeats.
// values_strict carries the indicator-loss companion series and stays
// empty unless an interval learner ran with EvalMode::Interval. final_mean
// and final_std summarize the per-repeat final cumulative averages
// (population std).
struct MetricSeries {
    std::vector<double> values;
    std::vector<double> values_strict;
    double final_mean = 0.0;
    double final_std = 0.0;
};

// Loads or generates data, runs cfg.repeats independent repeats (OpenMP
// across repeats when workers > 1), and aggregates. Throws
// std::invalid_argument on a malformed config, std::runtime_error on data
// problems.
MetricSeries run_experiment(const RunConfig& cfg);

// run_experiment once per fraction, everything else shared. Fractions all
// in [0, 1]; labels are always remixed.
struct SweepResult {
    std::vector<double> fractions;
    std::vector<MetricSeries> series;
};
SweepResult sweep_fractions(const RunConfig& cfg, const std::vector<double>& fractions);

// Shared-protocol comparison, all algorithms scored on exact rank error.
// Interval learners train on fully partial labels (fraction forced to 1)
// of cfg.label_type; baselines see exact ranks.
struct CompareResult {
    std::vector<Algorithm> algorithms;
    std::vector<MetricSeries> series;
};
CompareResult compare_algorithms(const RunConfig& cfg, const std::vector<Algorithm>& algorithms);

// Loads a dataset file for the harness: exchange-format files (trailing
// y_true,y_lo,y_hi,is_partial columns) go through read_dataset_csv, plain
// ordinal CSVs through load_ordinal_csv.
LabeledDataset load_dataset(const std::string& path, int k_override, const CsvLoadOptions& opts);

// round,avg_mae[,avg_mae_strict]
void write_series_csv(const MetricSeries& series, const std::string& path);
// fraction,round,avg_mae in fraction-major blocks
void write_sweep_csv(const SweepResult& result, const std::string& path);
// algorithm,round,avg_mae in algorithm-major blocks
void write_compare_csv(const CompareResult& result, const std::string& path);
// key=value sidecar describing an invocation
void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace pril
