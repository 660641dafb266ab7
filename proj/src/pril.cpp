#include "pril/pril.hpp"

#include <stdexcept>
#include <string>

namespace pril {

PrilStep compute_constraint_step(double score, const Vec& theta, const IntervalLabel& label,
                                 int k) {
    validate_label(label, k);
    PrilStep step;
    step.tau.assign(static_cast<std::size_t>(k - 1), 0);
    for (const auto& [i, z] : dummy_labels(label, k).entries) {
        double margin = static_cast<double>(z) * (score - theta[i - 1]);
        if (margin <= 0.0) {
            step.tau[i - 1] = z;
            step.violated.push_back(i);
        }
        if (margin < 0.0) step.pre_loss_imc -= margin;
    }
    step.pre_loss_mae = static_cast<int>(step.violated.size());
    return step;
}

LinearRankModel pril_init(int d, int k) {
    if (d < 1) throw std::invalid_argument("feature dimension d must be >= 1, got " + std::to_string(d));
    if (k < 2) throw std::invalid_argument("rank count k must be >= 2, got " + std::to_string(k));
    LinearRankModel m;
    m.w.assign(static_cast<std::size_t>(d), 0.0);
    m.theta.assign(static_cast<std::size_t>(k - 1), 0.0);
    m.k = k;
    return m;
}

PrilStep pril_update(LinearRankModel& model, const Vec& x, const IntervalLabel& label) {
    if (x.size() != model.w.size()) {
        throw std::invalid_argument("instance has dimension " + std::to_string(x.size()) +
                                    ", model expects " + std::to_string(model.w.size()));
    }
    double score = dot(model.w, x);
    PrilStep step = compute_constraint_step(score, model.theta, label, model.k);
    int tau_sum = 0;
    for (int t : step.tau) tau_sum += t;
    if (tau_sum != 0) axpy(static_cast<double>(tau_sum), x, model.w);
    for (std::size_t i = 0; i < model.theta.size(); ++i) {
        model.theta[i] -= static_cast<double>(step.tau[i]);
    }
    return step;
}

std::vector<RoundRecord> run_online(const std::vector<Vec>& xs,
                                    const std::vector<IntervalLabel>& labels, int d, int k) {
    if (xs.size() != labels.size()) {
        throw std::invalid_argument("stream has " + std::to_string(xs.size()) +
                                    " instances but " + std::to_string(labels.size()) + " labels");
    }
    LinearRankModel model = pril_init(d, k);
    std::vector<RoundRecord> trace;
    trace.reserve(xs.size());
    double cum_mae = 0.0, cum_strict = 0.0, cum_imc = 0.0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        double score = dot(model.w, xs[t]);
        RoundRecord rec;
        rec.round = static_cast<int>(t) + 1;
        rec.predicted = predict_rank(score, model.theta);
        rec.mae_strict = mae_interval_loss(score, model.theta, labels[t]);
        PrilStep step = pril_update(model, xs[t], labels[t]);
        rec.mae = step.pre_loss_mae;
        rec.imc = step.pre_loss_imc;
        cum_mae += rec.mae;
        cum_strict += rec.mae_strict;
        cum_imc += rec.imc;
        rec.cum_mae = cum_mae;
        rec.cum_mae_strict = cum_strict;
        rec.cum_imc = cum_imc;
        trace.push_back(rec);
    }
    return trace;
}

}  // namespace pril
