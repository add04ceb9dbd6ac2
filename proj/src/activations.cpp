#include "actcheck/activations.hpp"

#include <cmath>

#include "actcheck/kernels.hpp"

namespace actcheck {

namespace {

int eval_kind(ActivationKind kind) {
    switch (kind) {
        case ActivationKind::Expo: return 0;
        case ActivationKind::Sigmoid: return 1;
        default: return 2;
    }
}

Verdict verdict_of(double value, double checker, double residual, double eps) {
    // Written so that a NaN residual never passes.
    const bool ok = residual <= eps && std::isfinite(value) && std::isfinite(checker);
    return ok ? Verdict::Pass : Verdict::FaultDetected;
}

}  // namespace

const char* to_string(ActivationKind kind) {
    switch (kind) {
        case ActivationKind::Expo: return "expo";
        case ActivationKind::Sigmoid: return "sigmoid";
        case ActivationKind::Tanh: return "tanh";
        case ActivationKind::Relu: return "relu";
    }
    return "expo";
}

bool activation_from_string(const std::string& name, ActivationKind& out) {
    if (name == "expo") out = ActivationKind::Expo;
    else if (name == "sigmoid") out = ActivationKind::Sigmoid;
    else if (name == "tanh") out = ActivationKind::Tanh;
    else if (name == "relu") out = ActivationKind::Relu;
    else return false;
    return true;
}

double series_argument(ActivationKind kind, double x, const SeriesSettings& settings) {
    const double arg = kind == ActivationKind::Tanh ? 2.0 * x : x;
    return clip_by_value(arg, settings.clip_lo, settings.clip_hi);
}

double expo_baseline(const SeriesContext& ctx) { return sum_exp(ctx, ExpSign::Positive); }

double sigmoid_baseline(const SeriesContext& ctx) {
    return 1.0 / (1.0 + sum_exp(ctx, ExpSign::Negative));
}

double tanh_baseline(const SeriesContext& ctx2) {
    const double e2x = sum_exp(ctx2, ExpSign::Positive);
    return (e2x - 1.0) / (e2x + 1.0);
}

double relu_baseline(double x) { return x > 0.0 ? x : 0.0; }

ProtectedResult expo_check(double forward, const SeriesContext& ctx, double eps) {
    const auto [pos, neg] = sum_exp_pair(ctx);
    ProtectedResult res;
    res.value = forward;
    res.checker_value = neg;
    // e^x * e^-x = 1 over the shared terms, normalized by the sum scale so
    // the threshold is meaningful across the whole input range.
    res.residual = std::fabs(forward * neg - 1.0) / (std::fabs(forward) + std::fabs(neg));
    res.epsilon_used = eps;
    res.verdict = verdict_of(res.value, res.checker_value, res.residual, eps);
    return res;
}

ProtectedResult sigmoid_check(double forward, const SeriesContext& ctx, double eps) {
    const auto [pos, neg] = sum_exp_pair(ctx);
    (void)neg;
    ProtectedResult res;
    res.value = forward;
    res.checker_value = pos;
    // y/(1-y) = e^x compared through the sigmoid map on both sides:
    // y versus e^x/(1+e^x). Evaluating the quotient directly would amplify
    // the round-off of y by e^x(1+e^x) and false-alarm near x = 3.
    res.residual = std::fabs(forward - pos / (1.0 + pos));
    res.epsilon_used = eps;
    res.verdict = verdict_of(res.value, res.checker_value, res.residual, eps);
    return res;
}

ProtectedResult tanh_check(double forward, const SeriesContext& ctx2, double eps) {
    const auto [pos, neg] = sum_exp_pair(ctx2);
    (void)pos;
    ProtectedResult res;
    res.value = forward;
    res.checker_value = (neg - 1.0) / (neg + 1.0);
    // h2(y) = (a-1)/(a+1) with a = (1-y)/(1+y) against (E^-1)/(E^+1). Both
    // sides are mapped through t -> (1-t)/2, which algebraically halves the
    // distance and sidesteps the ill-conditioned a chain: (1-h2)/2 = (1+y)/2
    // and (1-g2)/2 = 1/(1+E^).
    const double fwd_sig = (1.0 + forward) / 2.0;
    const double chk_sig = 1.0 / (1.0 + neg);
    res.residual = std::fabs(fwd_sig - chk_sig);
    res.epsilon_used = eps;
    res.verdict = verdict_of(res.value, res.checker_value, res.residual, eps);
    return res;
}

ProtectedResult relu_protected(double x, double forward) {
    ProtectedResult res;
    res.value = forward;
    const double mirrored = relu_baseline(-x);
    res.checker_value = mirrored;
    const double sum = forward + mirrored;
    const bool consistent = (sum != 0.0 && x != 0.0) || (sum == 0.0 && x == 0.0);
    res.residual = consistent ? 0.0 : 1.0;  // h3 flag
    res.epsilon_used = 0.0;
    res.verdict = consistent ? Verdict::Pass : Verdict::FaultDetected;
    if (!std::isfinite(forward)) res.verdict = Verdict::FaultDetected;
    return res;
}

ProtectedResult expo_protected(const SeriesContext& ctx, double eps) {
    return expo_check(expo_baseline(ctx), ctx, eps);
}

ProtectedResult sigmoid_protected(const SeriesContext& ctx, double eps) {
    return sigmoid_check(sigmoid_baseline(ctx), ctx, eps);
}

ProtectedResult tanh_protected(const SeriesContext& ctx2, double eps) {
    return tanh_check(tanh_baseline(ctx2), ctx2, eps);
}

}  // namespace actcheck
