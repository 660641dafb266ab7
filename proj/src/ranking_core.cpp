#include "pril/ranking_core.hpp"

#include <stdexcept>
#include <string>

namespace pril {

void validate_label(const IntervalLabel& label, int k) {
    if (k < 2) throw std::invalid_argument("rank count k must be >= 2, got " + std::to_string(k));
    if (label.lo < 1 || label.hi < label.lo || label.hi > k) {
        throw std::invalid_argument("interval label [" + std::to_string(label.lo) + ", " +
                                    std::to_string(label.hi) + "] is not within ranks 1.." +
                                    std::to_string(k));
    }
}

DummyLabels dummy_labels(const IntervalLabel& label, int k) {
    validate_label(label, k);
    DummyLabels out;
    out.entries.reserve(static_cast<std::size_t>(label.lo - 1 + k - label.hi));
    for (int i = 1; i < label.lo; ++i) out.entries.emplace_back(i, +1);
    for (int i = label.hi; i <= k - 1; ++i) out.entries.emplace_back(i, -1);
    return out;
}

int predict_rank(double score, const Vec& theta) {
    const int km1 = static_cast<int>(theta.size());
    for (int i = 0; i < km1; ++i) {
        if (score < theta[i]) return i + 1;
    }
    return km1 + 1;
}

int mae_interval_loss(double score, const Vec& theta, const IntervalLabel& label) {
    int loss = 0;
    for (int i = 1; i < label.lo; ++i) {
        if (score < theta[i - 1]) ++loss;
    }
    const int km1 = static_cast<int>(theta.size());
    for (int i = label.hi; i <= km1; ++i) {
        if (score >= theta[i - 1]) ++loss;
    }
    return loss;
}

int violation_count(double score, const Vec& theta, const IntervalLabel& label) {
    int count = 0;
    for (int i = 1; i < label.lo; ++i) {
        if (score <= theta[i - 1]) ++count;
    }
    const int km1 = static_cast<int>(theta.size());
    for (int i = label.hi; i <= km1; ++i) {
        if (score >= theta[i - 1]) ++count;
    }
    return count;
}

double imc_loss(double score, const Vec& theta, const IntervalLabel& label) {
    double loss = 0.0;
    for (int i = 1; i < label.lo; ++i) {
        double slack = theta[i - 1] - score;  // violated amount for sign +1
        if (slack > 0.0) loss += slack;
    }
    const int km1 = static_cast<int>(theta.size());
    for (int i = label.hi; i <= km1; ++i) {
        double slack = score - theta[i - 1];  // violated amount for sign -1
        if (slack > 0.0) loss += slack;
    }
    return loss;
}

}  // namespace pril
