#include "pril/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pril {

PrilStep prank_update(LinearRankModel& model, const Vec& x, int y) {
    if (y < 1 || y > model.k) {
        throw std::invalid_argument("rank label " + std::to_string(y) + " outside 1.." +
                                    std::to_string(model.k));
    }
    return pril_update(model, x, IntervalLabel{y, y});
}

WidrowHoffModel wh_init(int d, int k, double lr) {
    if (d < 1) throw std::invalid_argument("feature dimension d must be >= 1, got " + std::to_string(d));
    if (k < 2) throw std::invalid_argument("rank count k must be >= 2, got " + std::to_string(k));
    if (lr < 0.0) throw std::invalid_argument("learning rate must be >= 0");
    WidrowHoffModel m;
    m.w.assign(static_cast<std::size_t>(d), 0.0);
    m.lr = lr;
    m.k = k;
    return m;
}

double wh_update(WidrowHoffModel& model, const Vec& x, int y) {
    if (x.size() != model.w.size()) {
        throw std::invalid_argument("instance has dimension " + std::to_string(x.size()) +
                                    ", model expects " + std::to_string(model.w.size()));
    }
    if (y < 1 || y > model.k) {
        throw std::invalid_argument("rank label " + std::to_string(y) + " outside 1.." +
                                    std::to_string(model.k));
    }
    double pred = dot(model.w, x);
    axpy(-2.0 * model.lr * (pred - static_cast<double>(y)), x, model.w);
    return pred;
}

int round_clip(double prediction, int k) {
    long r = std::lround(prediction);
    if (r < 1) r = 1;
    if (r > k) r = k;
    return static_cast<int>(r);
}

MultiClassPerceptron mcp_init(int d, int k) {
    if (d < 1) throw std::invalid_argument("feature dimension d must be >= 1, got " + std::to_string(d));
    if (k < 2) throw std::invalid_argument("rank count k must be >= 2, got " + std::to_string(k));
    MultiClassPerceptron m;
    m.weights.assign(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(d), 0.0));
    m.k = k;
    return m;
}

int mcp_predict(const MultiClassPerceptron& model, const Vec& x) {
    int best = 1;
    double best_score = dot(model.weights[0], x);
    for (int c = 2; c <= model.k; ++c) {
        double s = dot(model.weights[static_cast<std::size_t>(c - 1)], x);
        if (s > best_score) {
            best = c;
            best_score = s;
        }
    }
    return best;
}

int mcp_update(MultiClassPerceptron& model, const Vec& x, int y) {
    if (x.size() != model.weights[0].size()) {
        throw std::invalid_argument("instance has dimension " + std::to_string(x.size()) +
                                    ", model expects " + std::to_string(model.weights[0].size()));
    }
    if (y < 1 || y > model.k) {
        throw std::invalid_argument("rank label " + std::to_string(y) + " outside 1.." +
                                    std::to_string(model.k));
    }
    int pred = mcp_predict(model, x);
    if (pred != y) {
        axpy(1.0, x, model.weights[static_cast<std::size_t>(y - 1)]);
        axpy(-1.0, x, model.weights[static_cast<std::size_t>(pred - 1)]);
    }
    return pred;
}

}  // namespace pril
