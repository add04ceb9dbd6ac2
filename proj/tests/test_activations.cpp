#include <doctest.h>

#include <cmath>
#include <limits>

#include "actcheck/activations.hpp"
#include "actcheck/fault.hpp"
#include "actcheck/campaign.hpp"
#include "actcheck/rng.hpp"
#include "oracle.hpp"

using namespace actcheck;

namespace {

SeriesContext ctx_for(ActivationKind kind, double x) {
    const SeriesSettings s = default_settings(kind);
    return SeriesContext(series_argument(kind, x, s), s.term_count);
}

}  // namespace

TEST_CASE("sigmoid baseline values") {
    CHECK(sigmoid_baseline(ctx_for(ActivationKind::Sigmoid, 0.0)) == 0.5);

    const double at3 = sigmoid_baseline(ctx_for(ActivationKind::Sigmoid, 3.0));
    CHECK(std::fabs(at3 - static_cast<double>(oracle::sigmoid_ref(3.0))) <= 1e-14);

    const double atm3 = sigmoid_baseline(ctx_for(ActivationKind::Sigmoid, -3.0));
    CHECK(std::fabs(atm3 - static_cast<double>(oracle::sigmoid_ref(-3.0))) <= 1e-14);
    CHECK(std::fabs((1.0 - at3) - atm3) <= 1e-14);  // sigma(-x) = 1 - sigma(x)
}

TEST_CASE("tanh baseline values") {
    CHECK(tanh_baseline(ctx_for(ActivationKind::Tanh, 0.0)) == 0.0);

    const double at = tanh_baseline(ctx_for(ActivationKind::Tanh, 1.5));
    CHECK(std::fabs(at - static_cast<double>(oracle::tanh_ref(1.5))) <= 1e-14);

    // odd symmetry, checked through the reference value: the two argument
    // signs round independently
    const double atm = tanh_baseline(ctx_for(ActivationKind::Tanh, -1.5));
    CHECK(std::fabs(atm + static_cast<double>(oracle::tanh_ref(1.5))) <= 1e-14);
}

TEST_CASE("relu baseline and identity") {
    CHECK(relu_baseline(2.5) == 2.5);
    CHECK(relu_baseline(-2.5) == 0.0);
    CHECK(relu_baseline(0.0) == 0.0);

    RandomStream rng(21);
    for (int i = 0; i < 100000; ++i) {
        const double x = rng.uniform(-50.0, 50.0);
        CHECK(relu_baseline(x) + relu_baseline(-x) == std::fabs(x));
    }
}

TEST_CASE("protected sigmoid at zero and across the range") {
    const auto at0 = sigmoid_protected(ctx_for(ActivationKind::Sigmoid, 0.0), 1e-14);
    CHECK(at0.value == 0.5);
    CHECK(at0.checker_value == 1.0);  // e^0 over the cached terms
    CHECK(at0.residual == 0.0);
    CHECK(!at0.detected());

    const auto at07 = sigmoid_protected(ctx_for(ActivationKind::Sigmoid, 0.7), 1e-14);
    CHECK(!at07.detected());
}

TEST_CASE("protected tanh at zero") {
    const auto at0 = tanh_protected(ctx_for(ActivationKind::Tanh, 0.0), 1e-15);
    CHECK(at0.value == 0.0);
    CHECK(at0.checker_value == 0.0);
    CHECK(at0.residual == 0.0);
    CHECK(!at0.detected());
}

TEST_CASE("fault-free transparency: protected value equals baseline bitwise") {
    RandomStream rng(22);
    for (int i = 0; i < 3000; ++i) {
        const double x = rng.uniform(-3.0, 3.0);
        {
            const auto ctx = ctx_for(ActivationKind::Expo, x);
            const auto res = expo_protected(ctx, 1e-14);
            CHECK(!res.detected());
            CHECK(res.value == expo_baseline(ctx));
        }
        {
            const auto ctx = ctx_for(ActivationKind::Sigmoid, x);
            const auto res = sigmoid_protected(ctx, 1e-14);
            CHECK(!res.detected());
            CHECK(res.value == sigmoid_baseline(ctx));
        }
        {
            const auto ctx = ctx_for(ActivationKind::Tanh, x);
            const auto res = tanh_protected(ctx, 1e-15);
            CHECK(!res.detected());
            CHECK(res.value == tanh_baseline(ctx));
        }
    }
}

TEST_CASE("sigmoid inversion identity holds at default settings") {
    RandomStream rng(23);
    for (int i = 0; i < 3000; ++i) {
        const double x = rng.uniform(-3.0, 3.0);
        const auto ctx = ctx_for(ActivationKind::Sigmoid, x);
        const double y = sigmoid_baseline(ctx);
        const double ex = sum_exp(ctx, ExpSign::Positive);
        // y/(1-y) = e^x; compare through the bounded map y vs e^x/(1+e^x)
        CHECK(std::fabs(y - ex / (1.0 + ex)) <= 1e-14);
    }
}

TEST_CASE("negation-skip attack on sigmoid is detected") {
    RandomStream rng(24);
    for (int i = 0; i < 2000; ++i) {
        double x = rng.uniform(-3.0, 3.0);
        if (std::fabs(x) <= 1e-3) x = 1e-3;  // at x = 0 the attack is a no-op
        const auto ctx = ctx_for(ActivationKind::Sigmoid, x);
        // baseline computes 1/(1+e^{+x}) instead of 1/(1+e^{-x})
        const double attacked = 1.0 / (1.0 + sum_exp(ctx, ExpSign::Positive));
        CHECK(sigmoid_check(attacked, ctx, 1e-14).detected());
    }
    // spot value from the calibration point
    const auto ctx = ctx_for(ActivationKind::Sigmoid, 0.7);
    const double attacked = 1.0 / (1.0 + sum_exp(ctx, ExpSign::Positive));
    CHECK(sigmoid_check(attacked, ctx, 1e-14).detected());
}

TEST_CASE("negation-skip attack on tanh is detected") {
    RandomStream rng(25);
    for (int i = 0; i < 2000; ++i) {
        double x = rng.uniform(-3.0, 3.0);
        if (std::fabs(x) <= 1e-3) x = -1e-3;
        const auto ctx = ctx_for(ActivationKind::Tanh, x);
        // baseline uses e^{-2x} in place of e^{2x}
        const double wrong = sum_exp(ctx, ExpSign::Negative);
        const double attacked = (wrong - 1.0) / (wrong + 1.0);
        CHECK(tanh_check(attacked, ctx, 1e-15).detected());
    }
    const auto ctx = ctx_for(ActivationKind::Tanh, 1.2);
    const double wrong = sum_exp(ctx, ExpSign::Negative);
    CHECK(tanh_check((wrong - 1.0) / (wrong + 1.0), ctx, 1e-15).detected());
}

TEST_CASE("relu forced-zero attack and the h3 case table") {
    const auto good = relu_protected(2.0, 2.0);
    CHECK(!good.detected());

    const auto forced = relu_protected(2.0, 0.0);  // output forced to zero
    CHECK(forced.detected());
    CHECK(forced.residual == 1.0);

    const auto zero = relu_protected(0.0, 0.0);
    CHECK(!zero.detected());

    // fault-free negative input: sum = 0 + |x| != 0 and x != 0
    CHECK(!relu_protected(-1.5, 0.0).detected());
}

TEST_CASE("expo protected: fault-free passes, singular and NaN inputs detected") {
    const auto at0 = expo_protected(SeriesContext(0.0, 5), 1e-14);
    CHECK(at0.value == 1.0);
    CHECK(at0.checker_value == 1.0);
    CHECK(at0.residual == 0.0);
    CHECK(!at0.detected());

    RandomStream rng(26);
    for (int i = 0; i < 3000; ++i) {
        const double x = rng.uniform(-3.0, 3.0);
        CHECK(!expo_protected(ctx_for(ActivationKind::Expo, x), 1e-14).detected());
    }
}

TEST_CASE("a significand-MSB flip in a leading term is detected") {
    const auto ctx = ctx_for(ActivationKind::Expo, 2.0);
    FaultPlan plan;
    plan.targets.push_back({0, BitIndexSet{51}});  // 1.0 becomes 1.5
    RandomStream rng(27);
    const SeriesContext faulted = apply_fault(ctx, plan, FaultModel::BitFlipping, rng);
    CHECK(expo_protected(faulted, 1e-14).detected());
}

TEST_CASE("NaN discipline: non-finite terms force detection, never Pass") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    for (double bad : {nan, inf, -inf}) {
        auto ctx = SeriesContext::from_terms(1.0, {1.0, bad, 0.5});
        CHECK(expo_check(sum_exp(ctx, ExpSign::Positive), ctx, 1e-14).detected());
        CHECK(sigmoid_check(1.0 / (1.0 + sum_exp(ctx, ExpSign::Negative)), ctx, 1e-14).detected());
        CHECK(tanh_check(0.0, ctx, 1e-15).detected());
    }
    CHECK(relu_protected(1.0, nan).detected());
}

TEST_CASE("sigmoid y == 1 singularity fails closed") {
    const auto ctx = ctx_for(ActivationKind::Sigmoid, 1.0);
    CHECK(sigmoid_check(1.0, ctx, 1e-14).detected());
    CHECK(tanh_check(-1.0, ctx_for(ActivationKind::Tanh, 1.0), 1e-15).detected());
}
