#pragma once

#include <span>
#include <utility>
#include <vector>

namespace actcheck {

struct SeriesSettings {
    int term_count = 30;
    double epsilon = 1e-14;
    double clip_lo = -3.0;
    double clip_hi = 3.0;
};

double clip_by_value(double x, double lo, double hi);

// Cached Maclaurin terms T_k = x^k/k! for one series argument, built with
// the recurrence T_k = T_{k-1} * x / k. Immutable once constructed; fault
// injection produces a new context via from_terms.
class SeriesContext {
public:
    SeriesContext(double x, int term_count);

    static SeriesContext from_terms(double x, std::vector<double> terms) {
        return SeriesContext(std::move(terms), x);
    }

    double argument() const { return x_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    double term(int k) const { return terms_[static_cast<std::size_t>(k)]; }
    std::span<const double> terms() const { return terms_; }

private:
    SeriesContext(std::vector<double> terms, double x) : x_(x), terms_(std::move(terms)) {}

    double x_;
    std::vector<double> terms_;
};

inline SeriesContext maclaurin_terms(double x, int term_count) { return SeriesContext(x, term_count); }

enum class ExpSign { Positive, Negative };

// Neumaier-compensated ascending sum of T_k (Positive) or (-1)^k T_k
// (Negative). Plain accumulation leaves enough round-off at |x| close to 3
// that the checkers' thresholds cannot be met.
double sum_exp(const SeriesContext& ctx, ExpSign sign);

// Both sums in one pass over the cached terms.
std::pair<double, double> sum_exp_pair(const SeriesContext& ctx);

}  // namespace actcheck
