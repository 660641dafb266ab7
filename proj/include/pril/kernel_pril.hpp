#pragma once

#include <vector>

#include "pril/pril.hpp"
#include "pril/ranking_core.hpp"
#include "pril/vec.hpp"

namespace pril {

// Kernel choice for the dual learner. Poly of degree p evaluates
// (dot(a, b) + 1)^p; Dot is the plain inner product (degree ignored).
struct Kernel {
    enum class Kind { Dot, Poly };
    Kind kind = Kind::Dot;
    int degree = 2;
};

double kernel_eval(const Kernel& k, const Vec& a, const Vec& b);

// One stored trial of the dual model: the instance and the update
// directions it contributed. tau_sum caches the sum of tau.
struct SupportEntry {
    Vec x;
    std::vector<int> tau;
    int tau_sum = 0;
};

// Dual form of the threshold learner. The score of a query point is
//
//   f(x) = sum over support s of tau_sum_s * kappa(x_s, x)
//
// while the thresholds stay primal and follow theta_i -= tau_i exactly as
// in the linear rule. Bookkeeping invariant: theta_i equals minus the sum
// of stored tau_i, since trials with all-zero tau are not stored.
struct DualRankModel {
    std::vector<SupportEntry> support;
    Vec theta;
    Kernel kernel;
    int k = 2;
    int dim = 0;
};

// Empty support, zero thresholds. Throws std::invalid_argument if d < 1,
// k < 2, or a Poly kernel has degree < 1.
DualRankModel kpril_init(int d, int k, const Kernel& kernel);

// Score of one query point; O(support size) kernel evaluations, summed in
// storage order.
double dual_score(const DualRankModel& model, const Vec& x);

int dual_predict(const DualRankModel& model, const Vec& x);

// One online trial. Fires on the same constraint condition as pril_update;
// a trial with at least one violated constraint is appended to the support
// set. Throws std::invalid_argument on dimension mismatch or bad label.
PrilStep kpril_update(DualRankModel& model, const Vec& x, const IntervalLabel& label);

// Scores a batch of query points. workers > 1 distributes queries across
// OpenMP threads; every worker count produces byte-identical results since
// each query's sum stays in storage order.
std::vector<double> dual_scores(const DualRankModel& model, const std::vector<Vec>& xs,
                                int workers);

}  // namespace pril
