#include "actcheck/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include "detail.hpp"

namespace actcheck::kernels {

namespace {

constexpr std::size_t W = 2;  // doubles per float64x2_t

void build_terms_neon(const double* args, std::size_t count, int n_terms, double* terms) {
    std::size_t i = 0;
    for (; i + W <= count; i += W) {
        const float64x2_t x = vld1q_f64(args + i);
        float64x2_t head = vdupq_n_f64(1.0);
        float64x2_t tail = vdupq_n_f64(0.0);
        vst1q_f64(terms + i, head);
        for (int k = 1; k < n_terms; ++k) {
            float64x2_t p = vmulq_f64(head, x);
            // fma(head, x, -p) + tail * x
            float64x2_t e = vaddq_f64(vfmaq_f64(vnegq_f64(p), head, x), vmulq_f64(tail, x));
            float64x2_t s = vaddq_f64(p, e);
            e = vsubq_f64(e, vsubq_f64(s, p));
            p = s;
            const float64x2_t kd = vdupq_n_f64(static_cast<double>(k));
            const float64x2_t q = vdivq_f64(p, kd);
            // (p - q*k + e) / k
            float64x2_t r = vdivq_f64(vaddq_f64(vfmsq_f64(p, q, kd), e), kd);
            const float64x2_t s2 = vaddq_f64(q, r);
            r = vsubq_f64(r, vsubq_f64(s2, q));
            head = s2;
            tail = r;
            vst1q_f64(terms + static_cast<std::size_t>(k) * count + i, head);
        }
    }
    detail::build_terms_range(args, count, n_terms, terms, i, count);
}

inline void neumaier_step_v(float64x2_t term, float64x2_t& s, float64x2_t& c) {
    const float64x2_t t = vaddq_f64(s, term);
    const uint64x2_t big = vcgeq_f64(vabsq_f64(s), vabsq_f64(term));
    const float64x2_t a = vaddq_f64(vsubq_f64(s, t), term);
    const float64x2_t b = vaddq_f64(vsubq_f64(term, t), s);
    c = vaddq_f64(c, vbslq_f64(big, a, b));
    s = t;
}

void sum_exp_pair_neon(const double* terms, std::size_t count, int n_terms, double* pos,
                       double* neg) {
    std::size_t i = 0;
    for (; i + W <= count; i += W) {
        float64x2_t sp = vdupq_n_f64(0.0), cp = vdupq_n_f64(0.0);
        float64x2_t sn = vdupq_n_f64(0.0), cn = vdupq_n_f64(0.0);
        for (int k = 0; k < n_terms; ++k) {
            const float64x2_t term = vld1q_f64(terms + static_cast<std::size_t>(k) * count + i);
            neumaier_step_v(term, sp, cp);
            const float64x2_t nterm = (k & 1) ? vnegq_f64(term) : term;
            neumaier_step_v(nterm, sn, cn);
        }
        vst1q_f64(pos + i, vaddq_f64(sp, cp));
        vst1q_f64(neg + i, vaddq_f64(sn, cn));
    }
    detail::sum_exp_pair_range(terms, count, n_terms, pos, neg, i, count);
}

void eval_protected_neon(int kind, const double* pos, const double* neg, std::size_t count,
                         double* value, double* checker, double* residual) {
    const float64x2_t one = vdupq_n_f64(1.0);
    std::size_t i = 0;
    for (; i + W <= count; i += W) {
        const float64x2_t p = vld1q_f64(pos + i);
        const float64x2_t n = vld1q_f64(neg + i);
        float64x2_t v, c, r;
        switch (kind) {
            case 0: {
                v = p;
                c = n;
                const float64x2_t prod = vmulq_f64(p, n);
                r = vdivq_f64(vabsq_f64(vsubq_f64(prod, one)),
                              vaddq_f64(vabsq_f64(p), vabsq_f64(n)));
                break;
            }
            case 1: {
                v = vdivq_f64(one, vaddq_f64(one, n));
                c = p;
                const float64x2_t g = vdivq_f64(p, vaddq_f64(one, p));
                r = vabsq_f64(vsubq_f64(v, g));
                break;
            }
            default: {
                v = vdivq_f64(vsubq_f64(p, one), vaddq_f64(p, one));
                c = vdivq_f64(vsubq_f64(n, one), vaddq_f64(n, one));
                const float64x2_t fwd = vdivq_f64(vaddq_f64(one, v), vdupq_n_f64(2.0));
                const float64x2_t chk = vdivq_f64(one, vaddq_f64(one, n));
                r = vabsq_f64(vsubq_f64(fwd, chk));
                break;
            }
        }
        vst1q_f64(value + i, v);
        vst1q_f64(checker + i, c);
        vst1q_f64(residual + i, r);
    }
    detail::eval_protected_range(kind, pos, neg, count, value, checker, residual, i, count);
}

}  // namespace

const Ops* neon_ops() {
    static const Ops ops{"neon", build_terms_neon, sum_exp_pair_neon, eval_protected_neon};
    return &ops;
}

}  // namespace actcheck::kernels

#else

namespace actcheck::kernels {
const Ops* neon_ops() { return nullptr; }
}  // namespace actcheck::kernels

#endif
