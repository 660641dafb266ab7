#pragma once

#include "pril/pril.hpp"
#include "pril/ranking_core.hpp"
#include "pril/vec.hpp"

namespace pril {

// Multiplicative-update threshold learner. The concatenated parameter
// vector (w, theta) lives on the probability simplex: every component is
// positive and the L1 mass is exactly 1.
struct MultiplicativeModel {
    Vec w;
    Vec theta;
    double eta = 0.1;
    int k = 2;
};

// Uniform start: all d + k - 1 components equal 1 / (d + k - 1). Throws
// std::invalid_argument if d < 1, k < 2, or eta <= 0.
MultiplicativeModel mpril_init(int d, int k, double eta);

// One exponentiated-gradient trial. With tau from the shared constraint
// scan and S = sum_i tau_i:
//
//   w_j     <- w_j     * exp(eta * x_j * S)      / Z
//   theta_i <- theta_i * exp(-eta * tau_i)       / Z
//
// where Z renormalizes the full (w, theta) vector to L1 mass 1. A trial
// with no violated constraint leaves the model untouched. Along any
// trajectory from the uniform start, adjacent-threshold ratios stay exact
// integer powers of e^eta, so threshold order survives every update (up to
// roundoff).
PrilStep mpril_update(MultiplicativeModel& model, const Vec& x, const IntervalLabel& label);

int mpril_predict(const MultiplicativeModel& model, const Vec& x);

// Learning rate minimizing the multiplicative mistake bound:
//
//   eta = 1 / (2 (k - c - 1)) * log((k - c - 1 + gamma) / (k - c - 1 - gamma))
//
// for margin gamma and minimum interval width c (so k - c - 1 is the most
// constraints any trial can carry). Requires 0 < gamma <= 1 and
// gamma < k - c - 1; throws std::invalid_argument otherwise.
double mpril_eta_opt(int k, int c, double gamma);

}  // namespace pril
