#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pril/ranking_core.hpp"
#include "pril/rng.hpp"
#include "pril/vec.hpp"

namespace pril {

// Instances with exact ranks plus the interval labels actually shown to a
// learner. A freshly generated or loaded dataset has degenerate intervals
// (lo == hi == true rank) until mix_partial widens some of them.
struct LabeledDataset {
    std::vector<Vec> instances;
    std::vector<int> true_ranks;
    std::vector<IntervalLabel> intervals;
    std::vector<int> is_partial;  // 0/1 per row
    int k = 2;

    std::size_t size() const { return instances.size(); }
    int dim() const { return instances.empty() ? 0 : static_cast<int>(instances[0].size()); }
};

// Synthetic 5-rank stream on the unit square. Each point draws
// x1, x2 ~ U[0, 1) and noise ~ N(0, 0.125^2), in that order, and gets rank
//
//   y = max{ r : 10 (x1 - 1/2)(x2 - 1/2) + noise > b_r },
//   b = (-inf, -1, -0.1, 0.25, 1).
//
// Labels come out exact; widen them with mix_partial.
LabeledDataset synth_generate(std::size_t n, std::uint64_t seed);

// Rank decided by the synthetic rule for a given score value (the 10 x1 x2
// product plus noise); exposed for tests.
int synth_rank(double value);

// Type-1 interval around an exact rank: interior ranks widen one step
// toward a uniformly chosen side ([y-1, y] or [y, y+1]); the end ranks
// always give [1, 2] or [k-1, k]. Consumes one coin flip only for interior
// ranks.
IntervalLabel interval_type1(int y, int k, Rng& rng);

// Type-2 interval: [y-1, y+1] clipped into [1, k] ([1, 2] and [k-1, k] at
// the ends). Deterministic.
IntervalLabel interval_type2(int y, int k);

// Returns a copy of the dataset with round(fraction * n) rows relabeled by
// the chosen interval type and the rest reset to exact labels. The subset
// is a uniformly random draw (first rows of a Fisher-Yates permutation);
// coin flips for type 1 are consumed in ascending row order. Intervals are
// always rebuilt from true_ranks, so reapplying with the same rng state is
// idempotent. fraction must lie in [0, 1], label_type in {1, 2}.
LabeledDataset mix_partial(const LabeledDataset& base, double fraction, int label_type,
                           Rng& rng);

// Recipe for a stream that a known comparator separates with margin.
//
//   w_star, theta_star  the comparator; theta_star non-decreasing
//   norm                L2: |w|^2 + |theta|^2 = 1;
//                       L1NonNeg: all components >= 0, L1 mass 1
//   gamma               required margin, > 0
//   n                   rows to produce
//   max_width           widest interval to sample; -1 means k - 2
//   box_lo, box_hi      per-coordinate instance range
//   max_attempts        rejection budget; 0 means 1000 * n
struct SeparableSpec {
    Vec w_star;
    Vec theta_star;
    enum class Norm { L2, L1NonNeg };
    Norm norm = Norm::L2;
    double gamma = 0.1;
    std::size_t n = 0;
    int max_width = -1;
    double box_lo = -1.0;
    double box_hi = 1.0;
    std::size_t max_attempts = 0;
};

struct SeparableResult {
    LabeledDataset data;
    double r_sq = 0.0;      // max squared instance norm
    int c = 0;              // min interval width over rows (bound input)
    double min_margin = 0;  // smallest accepted constraint margin, >= gamma
};

// Rejection-samples (instance, interval) pairs: x uniform in the box,
// interval uniform over 1 <= lo <= hi <= k with width <= max_width, kept
// iff every induced constraint clears margin gamma under the comparator.
// True ranks are the comparator's own predictions. Throws
// std::invalid_argument on a malformed spec and std::runtime_error when
// the attempt budget runs out (gamma too ambitious for the comparator).
SeparableResult make_separable(const SeparableSpec& spec, std::uint64_t seed);

// Options for turning a plain numeric CSV into an ordinal dataset.
//
//   target_column     name of the label column; empty means the last one
//   bin_edges         ascending cut points; value v gets rank
//                     1 + #{edges strictly below v}, K = edges + 1
//   equal_width_bins  B > 0: B equal-width bins over the observed target
//                     range (mutually exclusive with bin_edges); with
//                     neither, targets must already be integer ranks >= 1
//   normalize         standardize every feature to mean 0, sd 1
//                     (population sd; constant columns become zeros)
//   one_hot           expand non-numeric columns into 0/1 indicators per
//                     sorted distinct value instead of dropping them
struct CsvLoadOptions {
    std::string target_column;
    std::vector<double> bin_edges;
    int equal_width_bins = 0;
    bool normalize = false;
    bool one_hot = false;
};

// Loads a headered CSV of numeric features plus a target column. Rows come
// back with exact labels. Non-numeric feature columns are dropped (with a
// stderr note) unless one_hot is set. Bad options throw
// std::invalid_argument; unreadable files and malformed cells throw
// std::runtime_error.
LabeledDataset load_ordinal_csv(const std::string& path, const CsvLoadOptions& opts);

// Dataset exchange format, one row per instance:
//   x_1, ..., x_d, y_true, y_lo, y_hi, is_partial
void write_dataset_csv(const LabeledDataset& ds, const std::string& path);

// Reads the exchange format back. k is inferred as the largest rank seen
// unless k_override > 0.
LabeledDataset read_dataset_csv(const std::string& path, int k_override = 0);

}  // namespace pril
