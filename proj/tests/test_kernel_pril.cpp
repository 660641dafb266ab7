#include "doctest.h"
#include "pril/kernel_pril.hpp"
#include "pril/rng.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

using namespace pril;

namespace {

IntervalLabel random_interval(Rng& rng, int k) {
    int lo = 1 + static_cast<int>(rng.next_index(static_cast<std::size_t>(k)));
    int hi = lo + static_cast<int>(rng.next_index(static_cast<std::size_t>(k - lo + 1)));
    return IntervalLabel{lo, hi};
}

}  // namespace

TEST_SUITE("kernel_pril") {

TEST_CASE("kernel_eval worked values") {
    Kernel dot{Kernel::Kind::Dot, 2};
    Kernel poly2{Kernel::Kind::Poly, 2};
    Kernel poly3{Kernel::Kind::Poly, 3};
    Vec a{1.0, 0.0}, b{1.0, 2.0};
    CHECK(kernel_eval(dot, a, b) == doctest::Approx(1.0).epsilon(1e-12));
    // (a.b + 1)^2 with a.b = 1 gives 4.
    CHECK(kernel_eval(poly2, a, b) == doctest::Approx(4.0).epsilon(1e-12));
    // Orthogonal vectors: (0 + 1)^3 = 1.
    CHECK(kernel_eval(poly3, Vec{1.0, 0.0}, Vec{0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kpril_init validates its arguments") {
    Kernel dot{Kernel::Kind::Dot, 2};
    auto m = kpril_init(3, 4, dot);
    CHECK(m.support.empty());
    CHECK(m.theta == Vec{0.0, 0.0, 0.0});
    CHECK(m.dim == 3);
    CHECK_THROWS_AS(kpril_init(0, 4, dot), std::invalid_argument);
    CHECK_THROWS_AS(kpril_init(3, 1, dot), std::invalid_argument);
    CHECK_THROWS_AS(kpril_init(3, 4, Kernel{Kernel::Kind::Poly, 0}), std::invalid_argument);
}

TEST_CASE("dual_score sums stored coefficients against the query") {
    // One stored entry with tau_sum = -1 and x_s = (1, 1); query (1, 1) under
    // the dot kernel scores -1 * 2 = -2.
    DualRankModel m = kpril_init(2, 3, Kernel{Kernel::Kind::Dot, 2});
    m.support.push_back(SupportEntry{Vec{1.0, 1.0}, {0, -1}, -1});
    m.theta = Vec{0.0, 1.0};
    CHECK(dual_score(m, Vec{1.0, 1.0}) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(dual_score(m, Vec{0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("first update from zero matches the primal step") {
    DualRankModel m = kpril_init(2, 5, Kernel{Kernel::Kind::Poly, 2});
    auto step = kpril_update(m, Vec{1.0, 0.0}, IntervalLabel{2, 3});
    CHECK(step.tau == std::vector<int>{1, 0, -1, -1});
    REQUIRE(m.support.size() == 1);
    CHECK(m.support[0].tau_sum == -1);
    CHECK(m.theta == Vec{-1.0, 0.0, 1.0, 1.0});
}

TEST_CASE("clean trials are not stored") {
    DualRankModel m = kpril_init(1, 3, Kernel{Kernel::Kind::Dot, 2});
    m.theta = Vec{-1.0, 1.0};
    auto step = kpril_update(m, Vec{0.0}, IntervalLabel{2, 2});
    CHECK(step.violated.empty());
    CHECK(m.support.empty());
    CHECK(m.theta == Vec{-1.0, 1.0});
}

TEST_CASE("dot kernel reproduces the linear learner trial for trial") {
    Rng rng(8675309);
    for (int run = 0; run < 100; ++run) {
        int d = 1 + static_cast<int>(rng.next_index(3));
        int k = 2 + static_cast<int>(rng.next_index(5));
        auto lin = pril_init(d, k);
        auto dual = kpril_init(d, k, Kernel{Kernel::Kind::Dot, 2});
        for (int t = 0; t < 40; ++t) {
            Vec x(d);
            for (double& v : x) v = rng.normal(0.0, 1.0);
            IntervalLabel lab = random_interval(rng, k);
            double s_lin = dot(lin.w, x);
            double s_dual = dual_score(dual, x);
            CHECK(std::abs(s_lin - s_dual) <= 1e-9);
            auto a = pril_update(lin, x, lab);
            auto b = kpril_update(dual, x, lab);
            CHECK(a.tau == b.tau);
            CHECK(a.pre_loss_mae == b.pre_loss_mae);
            CHECK(predict_rank(s_lin, lin.theta) == predict_rank(s_dual, dual.theta));
        }
        for (std::size_t i = 0; i < lin.theta.size(); ++i) {
            CHECK(lin.theta[i] == doctest::Approx(dual.theta[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("thresholds mirror the stored update directions") {
    Rng rng(424242);
    auto m = kpril_init(2, 5, Kernel{Kernel::Kind::Poly, 2});
    for (int t = 0; t < 120; ++t) {
        Vec x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        kpril_update(m, x, random_interval(rng, 5));
        Vec tau_totals(m.theta.size(), 0.0);
        for (const auto& s : m.support) {
            int sum = 0;
            for (std::size_t i = 0; i < tau_totals.size(); ++i) {
                tau_totals[i] += s.tau[i];
                sum += s.tau[i];
            }
            CHECK(sum == s.tau_sum);
        }
        for (std::size_t i = 0; i < tau_totals.size(); ++i) {
            CHECK(m.theta[i] == doctest::Approx(-tau_totals[i]).epsilon(1e-12));
        }
        for (std::size_t i = 1; i < m.theta.size(); ++i) {
            CHECK(m.theta[i - 1] <= m.theta[i]);
        }
    }
    CHECK_FALSE(m.support.empty());
}

TEST_CASE("dual_scores is invariant to the worker count") {
    Rng rng(1001);
    auto m = kpril_init(3, 4, Kernel{Kernel::Kind::Poly, 3});
    for (int t = 0; t < 80; ++t) {
        Vec x{rng.normal(0.0, 1.0), rng.normal(0.0, 1.0), rng.normal(0.0, 1.0)};
        kpril_update(m, x, random_interval(rng, 4));
    }
    std::vector<Vec> queries;
    for (int q = 0; q < 500; ++q) {
        queries.push_back(Vec{rng.normal(0.0, 1.0), rng.normal(0.0, 1.0), rng.normal(0.0, 1.0)});
    }
    auto serial = dual_scores(m, queries, 1);
    auto parallel = dual_scores(m, queries, 4);
    REQUIRE(serial.size() == queries.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i] == parallel[i]);  // bit-identical, not approximate
        CHECK(serial[i] == dual_score(m, queries[i]));
    }
}

TEST_CASE("kpril_update validates dimensions") {
    auto m = kpril_init(2, 4, Kernel{Kernel::Kind::Dot, 2});
    CHECK_THROWS_AS(kpril_update(m, Vec{1.0}, IntervalLabel{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(kpril_update(m, Vec{1.0, 0.0}, IntervalLabel{0, 1}), std::invalid_argument);
}

}  // TEST_SUITE
