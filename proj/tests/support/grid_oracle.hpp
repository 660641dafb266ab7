#pragma once

// Brute-force reference for the cumulative-surrogate-regret check: finds the
// best fixed one-feature, three-rank threshold model on a recorded stream by
// exhaustive grid search, with all arithmetic written out locally so the
// result is independent of the library under test.

#include <array>
#include <cstddef>
#include <limits>
#include <vector>

namespace grid_oracle {

// Total hinge loss sum_t sum_i max(0, -z_i (w x_t - theta_i)) minimized over
// the grid {-limit, -limit+step, ..., limit}^3 of (w, theta1, theta2),
// keeping only candidates with theta1 <= theta2 and squared length at most
// limit^2. signs[t] holds (z_1, z_2) for trial t, 0 marking a constraint the
// trial does not carry.
//
// The loss separates per threshold for a fixed w, so each w costs two
// 1-D profiles plus a pair scan instead of a full 3-D sweep.
inline double best_fixed_model_loss(const std::vector<double>& xs,
                                    const std::vector<std::array<int, 2>>& signs,
                                    double limit, double step) {
    const int m = static_cast<int>(limit / step + 0.5);
    const int grid = 2 * m + 1;
    const std::size_t n = xs.size();
    const double limit_sq = limit * limit + 1e-12;

    std::vector<double> a(grid), b(grid);
    double best = std::numeric_limits<double>::infinity();
    for (int iw = 0; iw < grid; ++iw) {
        const double w = (iw - m) * step;
        const double w_sq = w * w;
        if (w_sq > limit_sq) continue;
        for (int it = 0; it < grid; ++it) {
            const double th = (it - m) * step;
            double loss1 = 0.0, loss2 = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                const double s = w * xs[t];
                if (signs[t][0] != 0) {
                    const double v = -static_cast<double>(signs[t][0]) * (s - th);
                    if (v > 0.0) loss1 += v;
                }
                if (signs[t][1] != 0) {
                    const double v = -static_cast<double>(signs[t][1]) * (s - th);
                    if (v > 0.0) loss2 += v;
                }
            }
            a[it] = loss1;
            b[it] = loss2;
        }
        for (int i1 = 0; i1 < grid; ++i1) {
            const double th1 = (i1 - m) * step;
            const double partial_sq = w_sq + th1 * th1;
            if (partial_sq > limit_sq) continue;
            for (int i2 = i1; i2 < grid; ++i2) {
                const double th2 = (i2 - m) * step;
                // th2^2 is not monotone along the scan (it shrinks toward
                // zero first when th2 starts negative), so skip, not break.
                if (partial_sq + th2 * th2 > limit_sq) continue;
                const double cand = a[i1] + b[i2];
                if (cand < best) best = cand;
            }
        }
    }
    return best;
}

}  // namespace grid_oracle
