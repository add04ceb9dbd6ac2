#include "actcheck/fault.hpp"

#include <array>
#include <stdexcept>

namespace actcheck {

const char* to_string(FaultModel model) {
    switch (model) {
        case FaultModel::BitFlipping: return "bitflip";
        case FaultModel::StuckAt0: return "stuck0";
        case FaultModel::StuckAt1: return "stuck1";
        case FaultModel::InstructionSkipping: return "skip";
        case FaultModel::TotalRandom: return "random";
    }
    return "bitflip";
}

const char* to_string(InjectionType type) {
    return type == InjectionType::Burst ? "burst" : "random";
}

bool fault_model_from_string(const std::string& name, FaultModel& out) {
    if (name == "bitflip") out = FaultModel::BitFlipping;
    else if (name == "stuck0") out = FaultModel::StuckAt0;
    else if (name == "stuck1") out = FaultModel::StuckAt1;
    else if (name == "skip") out = FaultModel::InstructionSkipping;
    else if (name == "random") out = FaultModel::TotalRandom;
    else return false;
    return true;
}

bool injection_type_from_string(const std::string& name, InjectionType& out) {
    if (name == "random") out = InjectionType::Random;
    else if (name == "burst") out = InjectionType::Burst;
    else return false;
    return true;
}

namespace {

// First n entries of a Fisher-Yates shuffle over [0, limit).
template <int Limit>
void draw_distinct(RandomStream& rng, int n, int limit, int* out) {
    std::array<int, Limit> pool;
    for (int i = 0; i < limit; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < n; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint32_t>(limit - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        out[i] = pool[static_cast<std::size_t>(i)];
    }
}

BitIndexSet draw_bits(const FaultSpec& spec, RandomStream& rng) {
    if (spec.type == InjectionType::Burst) {
        // Random start, m consecutive bits upward, clamped at the sign bit.
        const int start = static_cast<int>(rng.below(64));
        std::uint64_t mask = 0;
        for (int b = start; b < start + spec.bits_per_term && b < 64; ++b) {
            mask |= std::uint64_t{1} << b;
        }
        return BitIndexSet::from_mask(mask);
    }
    int picks[64];
    draw_distinct<64>(rng, spec.bits_per_term, 64, picks);
    BitIndexSet bits;
    for (int i = 0; i < spec.bits_per_term; ++i) bits.insert(picks[i]);
    return bits;
}

}  // namespace

FaultPlan plan_faults(const FaultSpec& spec, int term_count, RandomStream& rng) {
    if (spec.faulty_terms < 1) throw std::invalid_argument("n must be >= 1");
    if (spec.faulty_terms > term_count) throw std::invalid_argument("n exceeds term count");
    if (is_bit_level(spec.model) && (spec.bits_per_term < 1 || spec.bits_per_term > 64)) {
        throw std::invalid_argument("m must be in [1, 64]");
    }
    if (term_count > 512) throw std::invalid_argument("term count above plan limit");

    int indices[512];
    draw_distinct<512>(rng, spec.faulty_terms, term_count, indices);

    FaultPlan plan;
    plan.targets.reserve(static_cast<std::size_t>(spec.faulty_terms));
    for (int i = 0; i < spec.faulty_terms; ++i) {
        FaultTarget target;
        target.term_index = indices[i];
        if (is_bit_level(spec.model)) target.bits = draw_bits(spec, rng);
        plan.targets.push_back(target);
    }
    return plan;
}

SeriesContext apply_fault(const SeriesContext& ctx, const FaultPlan& plan, FaultModel model,
                          RandomStream& rng) {
    std::vector<double> terms(ctx.terms().begin(), ctx.terms().end());
    for (const FaultTarget& target : plan.targets) {
        const std::size_t k = static_cast<std::size_t>(target.term_index);
        FloatWord word = FloatWord::from_double(terms[k]);
        switch (model) {
            case FaultModel::BitFlipping:
                word = flip_bits(word, target.bits);
                break;
            case FaultModel::StuckAt0:
                word = stuck_at(word, target.bits, 0);
                break;
            case FaultModel::StuckAt1:
                word = stuck_at(word, target.bits, 1);
                break;
            case FaultModel::InstructionSkipping:
                word = FloatWord::from_double(0.0);
                break;
            case FaultModel::TotalRandom:
                word = random_finite(rng);
                break;
        }
        terms[k] = word.to_double();
    }
    return SeriesContext::from_terms(ctx.argument(), std::move(terms));
}

}  // namespace actcheck
