#include "actcheck/kernels.hpp"

#if defined(ACTCHECK_HAVE_AVX2)

#include <immintrin.h>

#include "detail.hpp"

namespace actcheck::kernels {

namespace {

constexpr std::size_t W = 4;  // doubles per __m256d

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(kSignMask, v); }

void build_terms_avx2(const double* args, std::size_t count, int n_terms, double* terms) {
    std::size_t i = 0;
    for (; i + W <= count; i += W) {
        const __m256d x = _mm256_loadu_pd(args + i);
        __m256d head = _mm256_set1_pd(1.0);
        __m256d tail = _mm256_setzero_pd();
        _mm256_storeu_pd(terms + i, head);
        for (int k = 1; k < n_terms; ++k) {
            __m256d p = _mm256_mul_pd(head, x);
            __m256d e = _mm256_add_pd(_mm256_fmsub_pd(head, x, p), _mm256_mul_pd(tail, x));
            __m256d s = _mm256_add_pd(p, e);
            e = _mm256_sub_pd(e, _mm256_sub_pd(s, p));
            p = s;
            const __m256d kd = _mm256_set1_pd(static_cast<double>(k));
            const __m256d q = _mm256_div_pd(p, kd);
            __m256d r =
                _mm256_div_pd(_mm256_add_pd(_mm256_fnmadd_pd(q, kd, p), e), kd);
            const __m256d s2 = _mm256_add_pd(q, r);
            r = _mm256_sub_pd(r, _mm256_sub_pd(s2, q));
            head = s2;
            tail = r;
            _mm256_storeu_pd(terms + static_cast<std::size_t>(k) * count + i, head);
        }
    }
    detail::build_terms_range(args, count, n_terms, terms, i, count);
}

inline void neumaier_step_v(__m256d term, __m256d& s, __m256d& c) {
    const __m256d t = _mm256_add_pd(s, term);
    // |s| >= |term| ? (s - t) + term : (term - t) + s; false on NaN, like the
    // scalar fabs comparison.
    const __m256d big = _mm256_cmp_pd(vabs(s), vabs(term), _CMP_GE_OQ);
    const __m256d a = _mm256_add_pd(_mm256_sub_pd(s, t), term);
    const __m256d b = _mm256_add_pd(_mm256_sub_pd(term, t), s);
    c = _mm256_add_pd(c, _mm256_blendv_pd(b, a, big));
    s = t;
}

void sum_exp_pair_avx2(const double* terms, std::size_t count, int n_terms, double* pos,
                       double* neg) {
    std::size_t i = 0;
    for (; i + W <= count; i += W) {
        __m256d sp = _mm256_setzero_pd(), cp = _mm256_setzero_pd();
        __m256d sn = _mm256_setzero_pd(), cn = _mm256_setzero_pd();
        for (int k = 0; k < n_terms; ++k) {
            const __m256d term = _mm256_loadu_pd(terms + static_cast<std::size_t>(k) * count + i);
            neumaier_step_v(term, sp, cp);
            const __m256d nterm = (k & 1) ? _mm256_xor_pd(term, kSignMask) : term;
            neumaier_step_v(nterm, sn, cn);
        }
        _mm256_storeu_pd(pos + i, _mm256_add_pd(sp, cp));
        _mm256_storeu_pd(neg + i, _mm256_add_pd(sn, cn));
    }
    detail::sum_exp_pair_range(terms, count, n_terms, pos, neg, i, count);
}

void eval_protected_avx2(int kind, const double* pos, const double* neg, std::size_t count,
                         double* value, double* checker, double* residual) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + W <= count; i += W) {
        const __m256d p = _mm256_loadu_pd(pos + i);
        const __m256d n = _mm256_loadu_pd(neg + i);
        __m256d v, c, r;
        switch (kind) {
            case 0: {
                v = p;
                c = n;
                const __m256d prod = _mm256_mul_pd(p, n);
                r = _mm256_div_pd(vabs(_mm256_sub_pd(prod, one)),
                                  _mm256_add_pd(vabs(p), vabs(n)));
                break;
            }
            case 1: {
                v = _mm256_div_pd(one, _mm256_add_pd(one, n));
                c = p;
                const __m256d g = _mm256_div_pd(p, _mm256_add_pd(one, p));
                r = vabs(_mm256_sub_pd(v, g));
                break;
            }
            default: {
                v = _mm256_div_pd(_mm256_sub_pd(p, one), _mm256_add_pd(p, one));
                c = _mm256_div_pd(_mm256_sub_pd(n, one), _mm256_add_pd(n, one));
                const __m256d fwd =
                    _mm256_div_pd(_mm256_add_pd(one, v), _mm256_set1_pd(2.0));
                const __m256d chk = _mm256_div_pd(one, _mm256_add_pd(one, n));
                r = vabs(_mm256_sub_pd(fwd, chk));
                break;
            }
        }
        _mm256_storeu_pd(value + i, v);
        _mm256_storeu_pd(checker + i, c);
        _mm256_storeu_pd(residual + i, r);
    }
    detail::eval_protected_range(kind, pos, neg, count, value, checker, residual, i, count);
}

}  // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Ops ops{"avx2", build_terms_avx2, sum_exp_pair_avx2, eval_protected_avx2};
    return &ops;
}

}  // namespace actcheck::kernels

#else

namespace actcheck::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace actcheck::kernels

#endif
