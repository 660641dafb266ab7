#pragma once

#include <vector>

#include "pril/ranking_core.hpp"
#include "pril/vec.hpp"

namespace pril {

// Shared parameter block for the mistake / regret guarantees.
//
//   r_sq    R^2, max squared instance norm over the stream
//   k       number of ranks
//   c       minimum interval width over the stream, so K - c - 1 caps the
//           per-trial constraint count
//   gamma   margin achieved by the comparator
//   d_hinge hinge deficit D of an imperfect comparator (0 if separable)
//   lambda  comparator norm cap for the regret bound
//   t       stream length T for the regret bound
//   dim     feature dimension (multiplicative bound only)
struct BoundInputs {
    double r_sq = 0.0;
    int k = 2;
    int c = 0;
    double gamma = 1.0;
    double d_hinge = 0.0;
    double lambda = 0.0;
    double t = 0.0;
    int dim = 1;
};

// Mistake cap for a perfectly separating comparator of unit norm:
//
//   (R^2 + 1) (K - c - 1) / gamma^2
double ideal_mistake_bound(const BoundInputs& in);

// Mistake cap when the comparator itself pays hinge deficit D:
//
//   (D + sqrt(R^2 + 1))^2 (K - c - 1) / gamma^2
double general_mistake_bound(const BoundInputs& in);

// Cumulative-loss gap versus the best comparator with norm at most Lambda
// over T trials:
//
//   (Lambda^2 + T (R^2 + 1) (K - c - 1)) / 2
double regret_bound(const BoundInputs& in);

// Mistake cap for the multiplicative learner with its tuned rate, against
// a nonnegative comparator on the simplex:
//
//   (K - c - 1)^2 log(K + dim - 1) / gamma^2
double mpril_mistake_bound(const BoundInputs& in);

// Hinge deficit of a fixed comparator (w, theta) on a stream: the rooted
// sum of squared per-constraint shortfalls below margin gamma,
//
//   D = sqrt( sum over trials, constrained i of
//             max(0, gamma - z_i (dot(w, x) - theta_i))^2 ).
//
// Requires the comparator normalized: |w|^2 + |theta|^2 = 1 within 1e-9.
double hinge_deficit(const Vec& w, const Vec& theta, const std::vector<Vec>& xs,
                     const std::vector<IntervalLabel>& labels, double gamma);

}  // namespace pril
