#pragma once

#include <cmath>
#include <cstddef>

// Reference lane semantics. SIMD backends transcribe these operation
// sequences exactly; any reordering would break bit-for-bit equivalence.

namespace actcheck::kernels::detail {

// The T_k = T_{k-1} * x / k recurrence carried as a head/tail pair so the
// stored head stays within an ulp of the true x^k/k!; a plain double
// recurrence drifts by ~k/2 ulp, which the checkers' thresholds cannot
// absorb at the edges of the input range.
inline void build_terms_range(const double* args, std::size_t count, int n_terms, double* terms,
                              std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        const double x = args[i];
        double head = 1.0, tail = 0.0;
        terms[i] = 1.0;
        for (int k = 1; k < n_terms; ++k) {
            double p = head * x;
            double e = std::fma(head, x, -p) + tail * x;
            double s = p + e;
            e = e - (s - p);
            p = s;
            const double kd = static_cast<double>(k);
            const double q = p / kd;
            double r = (std::fma(-q, kd, p) + e) / kd;
            const double s2 = q + r;
            r = r - (s2 - q);
            head = s2;
            tail = r;
            terms[static_cast<std::size_t>(k) * count + i] = head;
        }
    }
}

inline void neumaier_step(double term, double& s, double& c) {
    const double t = s + term;
    if (std::fabs(s) >= std::fabs(term)) {
        c += (s - t) + term;
    } else {
        c += (term - t) + s;
    }
    s = t;
}

inline void sum_exp_pair_range(const double* terms, std::size_t count, int n_terms, double* pos,
                               double* neg, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        double sp = 0.0, cp = 0.0, sn = 0.0, cn = 0.0;
        for (int k = 0; k < n_terms; ++k) {
            const double term = terms[static_cast<std::size_t>(k) * count + i];
            neumaier_step(term, sp, cp);
            neumaier_step((k & 1) ? -term : term, sn, cn);
        }
        pos[i] = sp + cp;
        neg[i] = sn + cn;
    }
}

// kind: 0 expo, 1 sigmoid, 2 tanh.
inline void eval_protected_lane(int kind, double pos, double neg, double& value, double& checker,
                                double& residual) {
    switch (kind) {
        case 0: {
            value = pos;
            checker = neg;
            const double prod = pos * neg;
            residual = std::fabs(prod - 1.0) / (std::fabs(pos) + std::fabs(neg));
            break;
        }
        case 1: {
            const double y = 1.0 / (1.0 + neg);
            value = y;
            checker = pos;
            residual = std::fabs(y - pos / (1.0 + pos));
            break;
        }
        default: {
            const double y = (pos - 1.0) / (pos + 1.0);
            value = y;
            checker = (neg - 1.0) / (neg + 1.0);
            const double fwd = (1.0 + y) / 2.0;
            const double chk = 1.0 / (1.0 + neg);
            residual = std::fabs(fwd - chk);
            break;
        }
    }
}

inline void eval_protected_range(int kind, const double* pos, const double* neg, std::size_t count,
                                 double* value, double* checker, double* residual, std::size_t lo,
                                 std::size_t hi) {
    (void)count;
    for (std::size_t i = lo; i < hi; ++i) {
        eval_protected_lane(kind, pos[i], neg[i], value[i], checker[i], residual[i]);
    }
}

}  // namespace actcheck::kernels::detail
