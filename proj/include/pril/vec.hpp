#pragma once

#include <cstddef>
#include <vector>

namespace pril {

// Dense real vector. All model state and instances use this alias.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double l2_norm_sq(const Vec& v) { return dot(v, v); }

inline double l1_norm(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += (x < 0.0 ? -x : x);
    return s;
}

inline void axpy(double a, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

}  // namespace pril
