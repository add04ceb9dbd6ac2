#include "actcheck/kernels.hpp"

#include "detail.hpp"

namespace actcheck::kernels {

namespace {

void build_terms_scalar(const double* args, std::size_t count, int n_terms, double* terms) {
    detail::build_terms_range(args, count, n_terms, terms, 0, count);
}

void sum_exp_pair_scalar(const double* terms, std::size_t count, int n_terms, double* pos,
                         double* neg) {
    detail::sum_exp_pair_range(terms, count, n_terms, pos, neg, 0, count);
}

void eval_protected_scalar(int kind, const double* pos, const double* neg, std::size_t count,
                           double* value, double* checker, double* residual) {
    detail::eval_protected_range(kind, pos, neg, count, value, checker, residual, 0, count);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", build_terms_scalar, sum_exp_pair_scalar, eval_protected_scalar};
    return ops;
}

}  // namespace actcheck::kernels
