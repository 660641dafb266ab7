#include "doctest.h"
#include "pril/ranking_core.hpp"
#include "pril/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

using namespace pril;

TEST_SUITE("ranking_core") {

TEST_CASE("validate_label accepts in-range intervals and rejects the rest") {
    CHECK_NOTHROW(validate_label({1, 1}, 2));
    CHECK_NOTHROW(validate_label({1, 5}, 5));
    CHECK_NOTHROW(validate_label({3, 3}, 5));
    CHECK_THROWS_AS(validate_label({0, 1}, 5), std::invalid_argument);
    CHECK_THROWS_AS(validate_label({3, 2}, 5), std::invalid_argument);
    CHECK_THROWS_AS(validate_label({1, 6}, 5), std::invalid_argument);
    CHECK_THROWS_AS(validate_label({1, 1}, 1), std::invalid_argument);
}

TEST_CASE("dummy_labels lists the constrained thresholds with their signs") {
    // [2, 3] over 5 ranks: thresholds 1 must sit below the score, 3 and 4 above.
    DummyLabels dl = dummy_labels({2, 3}, 5);
    REQUIRE(dl.entries.size() == 3);
    CHECK(dl.entries[0] == std::pair<int, int>{1, +1});
    CHECK(dl.entries[1] == std::pair<int, int>{3, -1});
    CHECK(dl.entries[2] == std::pair<int, int>{4, -1});

    SUBCASE("exact label constrains every threshold") {
        DummyLabels exact = dummy_labels({3, 3}, 5);
        REQUIRE(exact.entries.size() == 4);
        CHECK(exact.entries[0] == std::pair<int, int>{1, +1});
        CHECK(exact.entries[1] == std::pair<int, int>{2, +1});
        CHECK(exact.entries[2] == std::pair<int, int>{3, -1});
        CHECK(exact.entries[3] == std::pair<int, int>{4, -1});
    }
    SUBCASE("full interval constrains nothing") {
        CHECK(dummy_labels({1, 5}, 5).entries.empty());
    }
    SUBCASE("end ranks constrain one side only") {
        DummyLabels low = dummy_labels({1, 1}, 3);
        REQUIRE(low.entries.size() == 2);
        CHECK(low.entries[0] == std::pair<int, int>{1, -1});
        CHECK(low.entries[1] == std::pair<int, int>{2, -1});
        DummyLabels high = dummy_labels({3, 3}, 3);
        REQUIRE(high.entries.size() == 2);
        CHECK(high.entries[0] == std::pair<int, int>{1, +1});
        CHECK(high.entries[1] == std::pair<int, int>{2, +1});
    }
}

TEST_CASE("predict_rank picks the first threshold the score fails") {
    Vec theta{-1.0, -0.1, 0.25, 1.0};
    CHECK(predict_rank(0.5, theta) == 4);   // first threshold above 0.5 is 1.0
    CHECK(predict_rank(-5.0, theta) == 1);
    CHECK(predict_rank(2.0, theta) == 5);
    CHECK(predict_rank(1.0, theta) == 5);   // tie on the last threshold resolves upward
    CHECK(predict_rank(-1.0, theta) == 2);  // tie on the first threshold
    CHECK(predict_rank(0.0, Vec{0.0}) == 2);
}

TEST_CASE("predict_rank is monotone in the score") {
    Vec theta{-0.5, -0.5, 0.25};
    double prev_score = -3.0;
    for (double score = -3.0; score <= 3.0; score += 0.01) {
        CHECK(predict_rank(prev_score, theta) <= predict_rank(score, theta));
        prev_score = score;
    }
}

TEST_CASE("mae_interval_loss worked values") {
    // theta = (-1, 0, 1, 2), label [2, 3]: left block {1}, right block {3, 4}.
    Vec theta{-1.0, 0.0, 1.0, 2.0};
    IntervalLabel lab{2, 3};
    CHECK(mae_interval_loss(0.1, theta, lab) == 0);   // predicted rank 3, inside
    CHECK(mae_interval_loss(1.0, theta, lab) == 1);   // clears theta_3, not theta_4
    CHECK(mae_interval_loss(2.5, theta, lab) == 2);
    CHECK(mae_interval_loss(-1.5, theta, lab) == 1);
    CHECK(mae_interval_loss(-0.5, theta, lab) == 0);
    // Exact label at a score off every threshold: the loss is the rank
    // distance to the prediction.
    CHECK(predict_rank(0.5, theta) == 3);
    CHECK(predict_rank(-1.7, theta) == 1);
    for (int y = 1; y <= 5; ++y) {
        IntervalLabel exact{y, y};
        CHECK(mae_interval_loss(0.5, theta, exact) == std::abs(3 - y));
        CHECK(mae_interval_loss(-1.7, theta, exact) == std::abs(1 - y));
    }
}

TEST_CASE("violation_count differs from the strict loss only on left-block ties") {
    Vec theta{-1.0, 0.0, 1.0, 2.0};
    IntervalLabel lab{2, 3};
    // Score exactly on the left-block threshold: the update fires but the
    // strict indicator does not.
    CHECK(violation_count(-1.0, theta, lab) == 1);
    CHECK(mae_interval_loss(-1.0, theta, lab) == 0);
    // Off thresholds the two agree.
    CHECK(violation_count(0.1, theta, lab) == 0);
    CHECK(violation_count(1.0, theta, lab) == 1);
    CHECK(violation_count(-1.5, theta, lab) == mae_interval_loss(-1.5, theta, lab));
    // Zero thresholds, zero score: all three constraints fire, the strict
    // loss sees only the right block.
    Vec zeros{0.0, 0.0, 0.0, 0.0};
    CHECK(violation_count(0.0, zeros, lab) == 3);
    CHECK(mae_interval_loss(0.0, zeros, lab) == 2);
}

TEST_CASE("imc_loss sums the violated slack") {
    Vec theta{-1.0, 0.0, 1.0, 2.0};
    IntervalLabel lab{2, 3};
    // score -2: left constraint short by 1, right constraints satisfied.
    CHECK(imc_loss(-2.0, theta, lab) == doctest::Approx(1.0).epsilon(1e-12));
    // score 1.5: above theta_3 by 0.5.
    CHECK(imc_loss(1.5, theta, lab) == doctest::Approx(0.5).epsilon(1e-12));
    // score 2.5: above theta_3 by 1.5 and theta_4 by 0.5.
    CHECK(imc_loss(2.5, theta, lab) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(imc_loss(0.5, theta, lab) == 0.0);
    // Ties contribute zero slack.
    CHECK(imc_loss(-1.0, theta, lab) == 0.0);
}

TEST_CASE("imc_loss is zero exactly when no constraint is strictly violated") {
    Vec theta{-0.5, 0.5};
    for (double score : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
        for (int lo = 1; lo <= 3; ++lo) {
            for (int hi = lo; hi <= 3; ++hi) {
                IntervalLabel lab{lo, hi};
                double imc = imc_loss(score, theta, lab);
                bool any_strict = false;
                for (auto [i, z] : dummy_labels(lab, 3).entries) {
                    if (z * (score - theta[i - 1]) < 0.0) any_strict = true;
                }
                CHECK((imc > 0.0) == any_strict);
            }
        }
    }
}

TEST_CASE("dummy label count equals k - 1 minus the interval width") {
    for (int k = 2; k <= 8; ++k) {
        for (int lo = 1; lo <= k; ++lo) {
            for (int hi = lo; hi <= k; ++hi) {
                IntervalLabel lab{lo, hi};
                auto d = dummy_labels(lab, k);
                CHECK(static_cast<int>(d.entries.size()) == k - 1 - lab.width());
            }
        }
    }
}

TEST_CASE("zero interval-insensitive loss implies a zero strict rank loss") {
    // With continuous random scores and thresholds, exact threshold ties have
    // probability zero, so the implication holds on every sampled point.
    Rng rng(20240521);
    for (int trial = 0; trial < 100000; ++trial) {
        int k = 2 + rng.next_index(7);
        Vec theta(k - 1);
        for (double& t : theta) t = rng.normal(0.0, 1.0);
        std::sort(theta.begin(), theta.end());
        int lo = 1 + rng.next_index(k);
        int hi = lo + rng.next_index(k - lo + 1);
        IntervalLabel lab{lo, hi};
        double score = rng.normal(0.0, 2.0);
        if (imc_loss(score, theta, lab) == 0.0) {
            CHECK(mae_interval_loss(score, theta, lab) == 0);
        }
    }
}

TEST_CASE("imc_loss is convex along score segments") {
    Rng rng(77);
    for (int trial = 0; trial < 2000; ++trial) {
        int k = 2 + rng.next_index(6);
        Vec theta(k - 1);
        for (double& t : theta) t = rng.normal(0.0, 1.0);
        std::sort(theta.begin(), theta.end());
        int lo = 1 + rng.next_index(k);
        int hi = lo + rng.next_index(k - lo + 1);
        IntervalLabel lab{lo, hi};
        double a = rng.normal(0.0, 2.0);
        double b = rng.normal(0.0, 2.0);
        double mid = 0.5 * (a + b);
        double lhs = imc_loss(mid, theta, lab);
        double rhs = 0.5 * (imc_loss(a, theta, lab) + imc_loss(b, theta, lab));
        CHECK(lhs <= rhs + 1e-9);
    }
}

}  // TEST_SUITE
