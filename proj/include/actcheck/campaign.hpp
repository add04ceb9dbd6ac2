#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "actcheck/activations.hpp"
#include "actcheck/fault.hpp"
#include "actcheck/kernels.hpp"
#include "actcheck/series.hpp"

namespace actcheck {

inline constexpr std::uint64_t kDefaultSeed = 20240917ull;

// Reference operating points: 30 terms at 1e-14 for the exponential and
// sigmoid, 40 terms at 1e-15 for tanh.
inline SeriesSettings default_settings(ActivationKind kind) {
    SeriesSettings s;
    if (kind == ActivationKind::Tanh) {
        s.term_count = 40;
        s.epsilon = 1e-15;
    }
    return s;
}

struct CampaignConfig {
    ActivationKind function = ActivationKind::Expo;  // Expo | Sigmoid | Tanh
    SeriesSettings settings;
    std::optional<FaultSpec> fault;
    int runs = 1000;
    double input_lo = -3.0;
    double input_hi = 3.0;
    std::uint64_t seed = kDefaultSeed;
    int workers = 1;
    // A missed fault whose output deviation does not exceed this is a benign
    // miss; 0 means the output must be unchanged.
    double benign_threshold = 0.0;
    kernels::Choice kernel = kernels::Choice::Auto;
};

enum class RunClass { Detected, BenignMiss, SilentCorruption };

struct CampaignStats {
    long runs = 0;
    long detected_count = 0;
    long benign_count = 0;
    long silent_count = 0;
    // detected / runs.
    double detection_ratio = 0.0;
    // (detected + benign) / runs: the fraction of injections that were
    // flagged or left the output untouched. This is the figure the
    // reference detection tables report.
    double coverage_ratio = 0.0;
    // Fault-free sweeps: Pass fraction.
    double consistency_ratio = 0.0;
};

// Validates a config; returns a diagnostic naming the offending field, or
// an empty string when valid.
std::string validate(const CampaignConfig& cfg);

// Monte-Carlo fault campaign: per run, a fresh input, a fresh fault plan,
// shared-cache injection, verdict and deviation classification. Bit-identical
// results for any worker count.
CampaignStats run_detection_campaign(const CampaignConfig& cfg);

struct ConsistencyCell {
    int term_count = 0;
    double epsilon = 0.0;
    long runs = 0;
    long pass_count = 0;
    double consistency_ratio = 0.0;
};

// Fault-free grid over term counts and thresholds. All epsilons of one
// term-count row see identical inputs, so consistency is non-decreasing
// in epsilon by construction.
std::vector<ConsistencyCell> run_consistency_sweep(ActivationKind function,
                                                   const std::vector<int>& term_counts,
                                                   const std::vector<double>& epsilons, int runs,
                                                   std::uint64_t seed, int workers = 1,
                                                   kernels::Choice kernel = kernels::Choice::Auto);

}  // namespace actcheck
