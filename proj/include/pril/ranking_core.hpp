#pragma once

#include <utility>
#include <vector>

#include "pril/vec.hpp"

namespace pril {

// Interval label [lo, hi] over ranks {1, ..., K}. A degenerate interval
// (lo == hi) is an exact label; a wider interval says only that the true
// rank lies somewhere inside.
struct IntervalLabel {
    int lo = 1;
    int hi = 1;

    int width() const { return hi - lo; }
    bool is_exact() const { return lo == hi; }
};

// Throws std::invalid_argument unless 1 <= lo <= hi <= k.
void validate_label(const IntervalLabel& label, int k);

// The per-trial constraint set induced by an interval label. For a model
// with thresholds theta_1 <= ... <= theta_{K-1}, rank consistency with
// [lo, hi] requires
//
//   score > theta_i   for i = 1, ..., lo-1   (sign +1)
//   score < theta_i   for i = hi, ..., K-1   (sign -1)
//
// entries lists (threshold index i, sign z_i) in ascending i; thresholds
// with lo <= i < hi are unconstrained and absent.
struct DummyLabels {
    std::vector<std::pair<int, int>> entries;
};

DummyLabels dummy_labels(const IntervalLabel& label, int k);

// Predicted rank: the smallest i in {1, ..., K-1} with score < theta_i,
// or K if the score clears every threshold. theta must be non-decreasing
// with K-1 entries; comparisons are strict, so a score exactly on a
// threshold resolves to the higher side.
int predict_rank(double score, const Vec& theta);

// Interval mean-absolute-error: the number of thresholds whose indicator
// disagrees with the label,
//
//   sum_{i < lo} 1{score < theta_i} + sum_{i >= hi} 1{score >= theta_i}.
//
// Zero exactly when predict_rank(score, theta) lands in [lo, hi]. For an
// exact label this is |predicted - true| whenever the score is off every
// threshold.
int mae_interval_loss(double score, const Vec& theta, const IntervalLabel& label);

// Number of constraints the update rule fires on: those with
// z_i * (score - theta_i) <= 0. Differs from mae_interval_loss only when
// the score sits exactly on a left-block threshold.
int violation_count(double score, const Vec& theta, const IntervalLabel& label);

// Interval-insensitive hinge surrogate:
//
//   sum over constrained i of max(0, -z_i * (score - theta_i)).
//
// Zero iff z_i * (score - theta_i) >= 0 for every constrained i.
double imc_loss(double score, const Vec& theta, const IntervalLabel& label);

}  // namespace pril
