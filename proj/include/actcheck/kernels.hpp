#pragma once

#include <cstddef>
#include <string>

namespace actcheck::kernels {

// Batched evaluation core shared by the campaign driver. Terms are stored
// row-per-order: terms[k * count + lane]. Every operation is a lanewise
// transcription of the scalar reference, so all backends produce
// bit-identical results; the equivalence suite enforces this.
struct Ops {
    const char* name;

    // terms[k][lane] = arg[lane]^k / k! via the t = t*x/k recurrence.
    void (*build_terms)(const double* args, std::size_t count, int n_terms, double* terms);

    // Neumaier-compensated ascending sums, both sign patterns in one pass.
    void (*sum_exp_pair)(const double* terms, std::size_t count, int n_terms, double* pos,
                         double* neg);

    // Protected evaluation on precomputed sums. kind: 0 expo, 1 sigmoid,
    // 2 tanh. Writes value, checker and residual per lane.
    void (*eval_protected)(int kind, const double* pos, const double* neg, std::size_t count,
                           double* value, double* checker, double* residual);
};

enum class Choice { Auto, Scalar, Avx2, Neon };

bool choice_from_string(const std::string& name, Choice& out);
const char* to_string(Choice choice);

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unsupported (build or CPU)
const Ops* neon_ops();

// Auto picks the widest backend the CPU supports.
const Ops& select(Choice choice);

}  // namespace actcheck::kernels
