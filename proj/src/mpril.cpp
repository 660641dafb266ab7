#include "pril/mpril.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pril {

MultiplicativeModel mpril_init(int d, int k, double eta) {
    if (d < 1) throw std::invalid_argument("feature dimension d must be >= 1, got " + std::to_string(d));
    if (k < 2) throw std::invalid_argument("rank count k must be >= 2, got " + std::to_string(k));
    if (!(eta > 0.0)) throw std::invalid_argument("learning rate eta must be > 0");
    MultiplicativeModel m;
    double u = 1.0 / static_cast<double>(d + k - 1);
    m.w.assign(static_cast<std::size_t>(d), u);
    m.theta.assign(static_cast<std::size_t>(k - 1), u);
    m.eta = eta;
    m.k = k;
    return m;
}

PrilStep mpril_update(MultiplicativeModel& model, const Vec& x, const IntervalLabel& label) {
    if (x.size() != model.w.size()) {
        throw std::invalid_argument("instance has dimension " + std::to_string(x.size()) +
                                    ", model expects " + std::to_string(model.w.size()));
    }
    double score = dot(model.w, x);
    PrilStep step = compute_constraint_step(score, model.theta, label, model.k);
    if (step.violated.empty()) return step;

    int tau_sum = 0;
    for (int t : step.tau) tau_sum += t;
    double z = 0.0;
    for (std::size_t j = 0; j < model.w.size(); ++j) {
        model.w[j] *= std::exp(model.eta * x[j] * static_cast<double>(tau_sum));
        z += model.w[j];
    }
    for (std::size_t i = 0; i < model.theta.size(); ++i) {
        model.theta[i] *= std::exp(-model.eta * static_cast<double>(step.tau[i]));
        z += model.theta[i];
    }
    for (double& wj : model.w) wj /= z;
    for (double& th : model.theta) th /= z;
    return step;
}

int mpril_predict(const MultiplicativeModel& model, const Vec& x) {
    return predict_rank(dot(model.w, x), model.theta);
}

double mpril_eta_opt(int k, int c, double gamma) {
    if (c < 0 || c > k - 2) {
        throw std::invalid_argument("minimum interval width c must satisfy 0 <= c <= k - 2");
    }
    double span = static_cast<double>(k - c - 1);
    if (!(gamma > 0.0) || gamma > 1.0 || !(gamma < span)) {
        throw std::invalid_argument("margin gamma must satisfy 0 < gamma <= 1 and gamma < k - c - 1");
    }
    return std::log((span + gamma) / (span - gamma)) / (2.0 * span);
}

}  // namespace pril
