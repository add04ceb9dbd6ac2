#pragma once

#include <string>
#include <vector>

#include "actcheck/campaign.hpp"
#include "actcheck/report.hpp"

namespace actcheck {

// One cell of a detection-ratio grid.
struct TableCell {
    FaultModel model;
    InjectionType type;
    int n;
    int m;
    ActivationKind function;
};

// Grid definitions: "random" and "burst" run bitflip/stuck1/stuck0 over six
// (n, m) rows; "skip_random" runs the two term-level models over n = 1..6.
std::vector<TableCell> table_cells(const std::string& which);

// Runs every cell at the per-function reference settings and returns the
// result records (ratio = coverage). Deterministic in (seed, runs),
// independent of worker count and kernel backend.
std::vector<OutputRecord> run_table(const std::string& which, std::uint64_t seed, int runs,
                                    int workers, kernels::Choice kernel);

}  // namespace actcheck
