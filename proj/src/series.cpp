#include "actcheck/series.hpp"

#include <stdexcept>

#include "actcheck/kernels.hpp"

namespace actcheck {

double clip_by_value(double x, double lo, double hi) {
    if (x < lo) return lo;
    if (x > hi) return hi;
    return x;  // NaN falls through unchanged
}

SeriesContext::SeriesContext(double x, int term_count) : x_(x) {
    if (term_count < 1) throw std::invalid_argument("term_count must be >= 1");
    terms_.resize(static_cast<std::size_t>(term_count));
    kernels::scalar_ops().build_terms(&x_, 1, term_count, terms_.data());
}

double sum_exp(const SeriesContext& ctx, ExpSign sign) {
    auto [pos, neg] = sum_exp_pair(ctx);
    return sign == ExpSign::Positive ? pos : neg;
}

std::pair<double, double> sum_exp_pair(const SeriesContext& ctx) {
    double pos = 0.0;
    double neg = 0.0;
    kernels::scalar_ops().sum_exp_pair(ctx.terms().data(), 1, ctx.term_count(), &pos, &neg);
    return {pos, neg};
}

}  // namespace actcheck
