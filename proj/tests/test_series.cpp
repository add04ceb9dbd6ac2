#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "actcheck/rng.hpp"
#include "actcheck/series.hpp"
#include "oracle.hpp"

using namespace actcheck;

TEST_CASE("clip_by_value saturates and keeps boundaries") {
    CHECK(clip_by_value(5.0, -3.0, 3.0) == 3.0);
    CHECK(clip_by_value(0.7, -3.0, 3.0) == 0.7);
    CHECK(clip_by_value(-3.0, -3.0, 3.0) == -3.0);
    CHECK(std::isnan(clip_by_value(std::nan(""), -3.0, 3.0)));
}

TEST_CASE("terms at fixed points") {
    const SeriesContext at_one(1.0, 5);
    CHECK(at_one.term(0) == 1.0);
    CHECK(at_one.term(1) == 1.0);
    CHECK(at_one.term(2) == 0.5);
    CHECK(at_one.term(3) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(at_one.term(4) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));

    const SeriesContext at_zero(0.0, 4);
    CHECK(at_zero.term(0) == 1.0);
    CHECK(at_zero.term(1) == 0.0);
    CHECK(at_zero.term(2) == 0.0);
    CHECK(at_zero.term(3) == 0.0);
}

TEST_CASE("recurrence terms match direct powers within 2 ulp") {
    RandomStream rng(10);
    for (int rep = 0; rep < 300; ++rep) {
        const double x = rng.uniform(-3.0, 3.0);
        const SeriesContext ctx(x, 51);
        for (int k = 0; k <= 50; ++k) {
            const double direct = static_cast<double>(oracle::term_direct(x, k));
            CHECK(oracle::ulp_distance(ctx.term(k), direct) <= 2);
        }
    }
    const SeriesContext three(3.0, 30);
    for (int k = 0; k < 30; ++k) {
        CHECK(oracle::ulp_distance(three.term(k),
                                   static_cast<double>(oracle::term_direct(3.0, k))) <= 2);
    }
}

TEST_CASE("sum_exp against the reference exponential") {
    CHECK(sum_exp(SeriesContext(0.0, 10), ExpSign::Positive) == 1.0);

    const double e1 = sum_exp(SeriesContext(1.0, 30), ExpSign::Positive);
    CHECK(std::fabs(e1 - static_cast<double>(oracle::exp_ref(1.0))) <= 1e-14);

    const double em2 = sum_exp(SeriesContext(2.0, 30), ExpSign::Negative);
    CHECK(std::fabs(em2 - static_cast<double>(oracle::exp_ref(-2.0))) <= 1e-14);
}

TEST_CASE("truncation bound at 30 terms over [-3,3]") {
    RandomStream rng(11);
    for (int rep = 0; rep < 5000; ++rep) {
        const double x = rng.uniform(-3.0, 3.0);
        const double sum = sum_exp(SeriesContext(x, 30), ExpSign::Positive);
        CHECK(std::fabs(sum - static_cast<double>(oracle::exp_ref(x))) <= 1e-14);
    }
}

TEST_CASE("caching equivalence: alternating signs agree with negated argument") {
    RandomStream rng(12);
    for (int rep = 0; rep < 2000; ++rep) {
        const double x = rng.uniform(-3.0, 3.0);
        const int n = 5 + static_cast<int>(rng.below(46));
        const double cached = sum_exp(SeriesContext(x, n), ExpSign::Negative);
        const double rebuilt = sum_exp(SeriesContext(-x, n), ExpSign::Positive);
        CHECK(oracle::ulp_distance(cached, rebuilt) <= 4);
    }
}

TEST_CASE("sum_exp_pair matches the individual sums") {
    const SeriesContext ctx(1.7, 30);
    const auto [pos, neg] = sum_exp_pair(ctx);
    CHECK(pos == sum_exp(ctx, ExpSign::Positive));
    CHECK(neg == sum_exp(ctx, ExpSign::Negative));
}

TEST_CASE("term_count below one is rejected") {
    CHECK_THROWS_AS(SeriesContext(1.0, 0), std::invalid_argument);
}
