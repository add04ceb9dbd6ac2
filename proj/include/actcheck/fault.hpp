#pragma once

#include <string>
#include <vector>

#include "actcheck/float_bits.hpp"
#include "actcheck/series.hpp"

namespace actcheck {

enum class FaultModel { BitFlipping, StuckAt0, StuckAt1, InstructionSkipping, TotalRandom };
enum class InjectionType { Random, Burst };

const char* to_string(FaultModel model);
const char* to_string(InjectionType type);
bool fault_model_from_string(const std::string& name, FaultModel& out);
bool injection_type_from_string(const std::string& name, InjectionType& out);

// True for models that corrupt individual bits; Skipping and TotalRandom
// replace the whole term and ignore m.
inline bool is_bit_level(FaultModel model) {
    return model == FaultModel::BitFlipping || model == FaultModel::StuckAt0 ||
           model == FaultModel::StuckAt1;
}

struct FaultSpec {
    FaultModel model = FaultModel::BitFlipping;
    InjectionType type = InjectionType::Random;
    int faulty_terms = 1;   // n
    int bits_per_term = 1;  // m, ignored for term-level models
};

struct FaultTarget {
    int term_index = 0;
    BitIndexSet bits;  // empty for term-level models
};

struct FaultPlan {
    std::vector<FaultTarget> targets;
};

// n distinct term indices drawn without replacement; per-target bit sets
// follow the injection type: Random draws m distinct positions, Burst draws
// one start position and takes m consecutive bits, clamped at bit 63.
// Deterministic given the stream state. Throws std::invalid_argument when
// the spec does not fit the context.
FaultPlan plan_faults(const FaultSpec& spec, int term_count, RandomStream& rng);

// Returns a context identical to ctx except the targeted terms. TotalRandom
// draws its replacement patterns from rng; all other models are pure.
SeriesContext apply_fault(const SeriesContext& ctx, const FaultPlan& plan, FaultModel model,
                          RandomStream& rng);

}  // namespace actcheck
