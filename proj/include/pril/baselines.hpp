#pragma once

#include <vector>

#include "pril/pril.hpp"
#include "pril/vec.hpp"

namespace pril {

// PRank trial: the exact-label special case of the interval rule. Feeding
// the degenerate interval [y, y] through pril_update reproduces PRank's
// update exactly, so that is literally what this does. Throws
// std::invalid_argument unless 1 <= y <= k.
PrilStep prank_update(LinearRankModel& model, const Vec& x, int y);

// Widrow-Hoff regressor on rank values.
struct WidrowHoffModel {
    Vec w;
    double lr = 0.1;
    int k = 2;
};

// Zero weights. Throws std::invalid_argument if d < 1, k < 2, or lr < 0.
WidrowHoffModel wh_init(int d, int k, double lr);

// One LMS step on target y: w -= 2 * lr * (dot(w, x) - y) * x. Returns the
// pre-update real-valued prediction.
double wh_update(WidrowHoffModel& model, const Vec& x, int y);

// Real prediction to rank: round to nearest integer, clamp into {1..k}.
int round_clip(double prediction, int k);

// Multi-class perceptron, one weight vector per rank, order ignored.
struct MultiClassPerceptron {
    std::vector<Vec> weights;  // k rows of dimension d
    int k = 2;
};

MultiClassPerceptron mcp_init(int d, int k);

// Predicted class: argmax of per-class scores, ties to the lowest index.
int mcp_predict(const MultiClassPerceptron& model, const Vec& x);

// One perceptron trial: on a mistake, add x to the true class row and
// subtract it from the predicted row. Returns the pre-update prediction.
int mcp_update(MultiClassPerceptron& model, const Vec& x, int y);

}  // namespace pril
