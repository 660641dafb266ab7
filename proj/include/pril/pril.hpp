#pragma once

#include <vector>

#include "pril/ranking_core.hpp"
#include "pril/vec.hpp"

namespace pril {

// Linear threshold model for K ordinal ranks: a weight vector w and K-1
// non-decreasing thresholds. predict_rank(dot(w, x), theta) is the rank.
struct LinearRankModel {
    Vec w;
    Vec theta;
    int k = 2;
};

// Outcome of one online trial, captured before the model changes.
//
//   tau[i]        update direction for threshold i+1 (-1, 0, or +1)
//   violated      1-based indices of the constraints that fired
//   pre_loss_mae  violated.size(): the rank loss charged to this trial
//   pre_loss_imc  hinge surrogate at the pre-update model
//
// pre_loss_mae counts constraints with z_i (score - theta_i) <= 0; this
// equals mae_interval_loss except when the score sits exactly on a
// threshold below the interval.
struct PrilStep {
    std::vector<int> tau;
    std::vector<int> violated;
    int pre_loss_mae = 0;
    double pre_loss_imc = 0.0;
};

// Shared constraint scan: fills tau / violated / losses for the given score
// against the current thresholds. All threshold algorithms (primal, kernel,
// multiplicative) fire updates on exactly this condition.
PrilStep compute_constraint_step(double score, const Vec& theta, const IntervalLabel& label,
                                 int k);

// Zero weights, zero thresholds. Throws std::invalid_argument if d < 1 or
// k < 2.
LinearRankModel pril_init(int d, int k);

// One perceptron trial on an interval-labeled instance. All violated
// constraints are corrected simultaneously:
//
//   w     += (sum_i tau_i) x
//   theta_i -= tau_i
//
// Returns the pre-update step record. Throws std::invalid_argument on a
// dimension mismatch or an invalid label.
PrilStep pril_update(LinearRankModel& model, const Vec& x, const IntervalLabel& label);

// Per-trial trace of an online run.
struct RoundRecord {
    int round = 0;          // 1-based trial number
    int predicted = 0;      // rank predicted before the update
    int mae = 0;            // violated-constraint count (the primary loss)
    int mae_strict = 0;     // indicator-sum interval loss
    double imc = 0.0;       // hinge surrogate
    double cum_mae = 0.0;   // running sums of the above
    double cum_mae_strict = 0.0;
    double cum_imc = 0.0;
};

// Runs PRIL from scratch over the stream, one update per trial, and returns
// one record per trial. Empty stream gives an empty trace.
std::vector<RoundRecord> run_online(const std::vector<Vec>& xs,
                                    const std::vector<IntervalLabel>& labels, int d, int k);

}  // namespace pril
