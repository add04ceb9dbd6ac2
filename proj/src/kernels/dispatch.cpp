#include "actcheck/kernels.hpp"

namespace actcheck::kernels {

bool choice_from_string(const std::string& name, Choice& out) {
    if (name == "auto") out = Choice::Auto;
    else if (name == "scalar") out = Choice::Scalar;
    else if (name == "avx2") out = Choice::Avx2;
    else if (name == "neon") out = Choice::Neon;
    else return false;
    return true;
}

const char* to_string(Choice choice) {
    switch (choice) {
        case Choice::Auto: return "auto";
        case Choice::Scalar: return "scalar";
        case Choice::Avx2: return "avx2";
        case Choice::Neon: return "neon";
    }
    return "auto";
}

const Ops& select(Choice choice) {
    switch (choice) {
        case Choice::Scalar:
            return scalar_ops();
        case Choice::Avx2:
            if (const Ops* ops = avx2_ops()) return *ops;
            return scalar_ops();
        case Choice::Neon:
            if (const Ops* ops = neon_ops()) return *ops;
            return scalar_ops();
        case Choice::Auto:
            break;
    }
    if (const Ops* ops = avx2_ops()) return *ops;
    if (const Ops* ops = neon_ops()) return *ops;
    return scalar_ops();
}

}  // namespace actcheck::kernels
