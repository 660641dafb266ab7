#include "pril/kernel_pril.hpp"

#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pril {

double kernel_eval(const Kernel& k, const Vec& a, const Vec& b) {
    double d = dot(a, b);
    if (k.kind == Kernel::Kind::Dot) return d;
    double base = d + 1.0;
    double out = 1.0;
    for (int i = 0; i < k.degree; ++i) out *= base;
    return out;
}

DualRankModel kpril_init(int d, int k, const Kernel& kernel) {
    if (d < 1) throw std::invalid_argument("feature dimension d must be >= 1, got " + std::to_string(d));
    if (k < 2) throw std::invalid_argument("rank count k must be >= 2, got " + std::to_string(k));
    if (kernel.kind == Kernel::Kind::Poly && kernel.degree < 1) {
        throw std::invalid_argument("polynomial kernel degree must be >= 1, got " +
                                    std::to_string(kernel.degree));
    }
    DualRankModel m;
    m.theta.assign(static_cast<std::size_t>(k - 1), 0.0);
    m.kernel = kernel;
    m.k = k;
    m.dim = d;
    return m;
}

double dual_score(const DualRankModel& model, const Vec& x) {
    double s = 0.0;
    for (const SupportEntry& e : model.support) {
        if (e.tau_sum != 0) s += static_cast<double>(e.tau_sum) * kernel_eval(model.kernel, e.x, x);
    }
    return s;
}

int dual_predict(const DualRankModel& model, const Vec& x) {
    return predict_rank(dual_score(model, x), model.theta);
}

PrilStep kpril_update(DualRankModel& model, const Vec& x, const IntervalLabel& label) {
    if (static_cast<int>(x.size()) != model.dim) {
        throw std::invalid_argument("instance has dimension " + std::to_string(x.size()) +
                                    ", model expects " + std::to_string(model.dim));
    }
    double score = dual_score(model, x);
    PrilStep step = compute_constraint_step(score, model.theta, label, model.k);
    if (!step.violated.empty()) {
        SupportEntry entry;
        entry.x = x;
        entry.tau = step.tau;
        for (int t : step.tau) entry.tau_sum += t;
        model.support.push_back(std::move(entry));
        for (std::size_t i = 0; i < model.theta.size(); ++i) {
            model.theta[i] -= static_cast<double>(step.tau[i]);
        }
    }
    return step;
}

std::vector<double> dual_scores(const DualRankModel& model, const std::vector<Vec>& xs,
                                int workers) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1, got " + std::to_string(workers));
    std::vector<double> out(xs.size(), 0.0);
    if (workers == 1) {
        for (std::size_t q = 0; q < xs.size(); ++q) out[q] = dual_score(model, xs[q]);
        return out;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long long q = 0; q < static_cast<long long>(xs.size()); ++q) {
        out[static_cast<std::size_t>(q)] = dual_score(model, xs[static_cast<std::size_t>(q)]);
    }
#else
    for (std::size_t q = 0; q < xs.size(); ++q) out[q] = dual_score(model, xs[q]);
#endif
    return out;
}

}  // namespace pril
