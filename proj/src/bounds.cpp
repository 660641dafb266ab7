#include "pril/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pril {

namespace {

double span_or_throw(const BoundInputs& in) {
    if (in.k < 2) throw std::invalid_argument("rank count k must be >= 2, got " + std::to_string(in.k));
    if (in.c < 0 || in.c > in.k - 1) {
        throw std::invalid_argument("minimum interval width c must satisfy 0 <= c <= k - 1");
    }
    if (in.r_sq < 0.0) throw std::invalid_argument("r_sq must be >= 0");
    return static_cast<double>(in.k - in.c - 1);
}

void require_margin(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("margin gamma must be > 0");
}

}  // namespace

double ideal_mistake_bound(const BoundInputs& in) {
    double span = span_or_throw(in);
    require_margin(in.gamma);
    return (in.r_sq + 1.0) * span / (in.gamma * in.gamma);
}

double general_mistake_bound(const BoundInputs& in) {
    double span = span_or_throw(in);
    require_margin(in.gamma);
    if (in.d_hinge < 0.0) throw std::invalid_argument("hinge deficit must be >= 0");
    double root = in.d_hinge + std::sqrt(in.r_sq + 1.0);
    return root * root * span / (in.gamma * in.gamma);
}

double regret_bound(const BoundInputs& in) {
    double span = span_or_throw(in);
    if (in.t < 0.0) throw std::invalid_argument("horizon t must be >= 0");
    if (in.lambda < 0.0) throw std::invalid_argument("comparator cap lambda must be >= 0");
    return 0.5 * (in.lambda * in.lambda + in.t * (in.r_sq + 1.0) * span);
}

double mpril_mistake_bound(const BoundInputs& in) {
    double span = span_or_throw(in);
    require_margin(in.gamma);
    if (in.gamma > 1.0) throw std::invalid_argument("margin gamma must be <= 1 for the multiplicative bound");
    if (in.dim < 1) throw std::invalid_argument("feature dimension must be >= 1");
    return span * span * std::log(static_cast<double>(in.k + in.dim - 1)) / (in.gamma * in.gamma);
}

double hinge_deficit(const Vec& w, const Vec& theta, const std::vector<Vec>& xs,
                     const std::vector<IntervalLabel>& labels, double gamma) {
    require_margin(gamma);
    if (xs.size() != labels.size()) {
        throw std::invalid_argument("stream has " + std::to_string(xs.size()) +
                                    " instances but " + std::to_string(labels.size()) + " labels");
    }
    double norm = l2_norm_sq(w) + l2_norm_sq(theta);
    if (std::fabs(norm - 1.0) > 1e-9) {
        throw std::invalid_argument("comparator must be normalized: |w|^2 + |theta|^2 = 1");
    }
    const int k = static_cast<int>(theta.size()) + 1;
    double sum_sq = 0.0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        double score = dot(w, xs[t]);
        for (const auto& [i, z] : dummy_labels(labels[t], k).entries) {
            double short_fall = gamma - static_cast<double>(z) * (score - theta[i - 1]);
            if (short_fall > 0.0) sum_sq += short_fall * short_fall;
        }
    }
    return std::sqrt(sum_sq);
}

}  // namespace pril
