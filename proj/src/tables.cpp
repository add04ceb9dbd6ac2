#include "actcheck/tables.hpp"

#include <stdexcept>

namespace actcheck {

std::vector<TableCell> table_cells(const std::string& which) {
    const ActivationKind fns[] = {ActivationKind::Expo, ActivationKind::Sigmoid,
                                  ActivationKind::Tanh};
    std::vector<TableCell> cells;
    if (which == "random" || which == "burst") {
        const FaultModel models[] = {FaultModel::BitFlipping, FaultModel::StuckAt1,
                                     FaultModel::StuckAt0};
        const InjectionType type = which == "burst" ? InjectionType::Burst : InjectionType::Random;
        const int low_m = which == "burst" ? 2 : 1;
        const std::pair<int, int> nm[] = {{1, low_m}, {1, 5}, {3, low_m},
                                          {3, 5},     {6, low_m}, {6, 5}};
        for (FaultModel model : models) {
            for (auto [n, m] : nm) {
                for (ActivationKind fn : fns) cells.push_back({model, type, n, m, fn});
            }
        }
        return cells;
    }
    if (which == "skip_random") {
        const FaultModel models[] = {FaultModel::InstructionSkipping, FaultModel::TotalRandom};
        for (FaultModel model : models) {
            for (int n = 1; n <= 6; ++n) {
                for (ActivationKind fn : fns) {
                    cells.push_back({model, InjectionType::Random, n, 1, fn});
                }
            }
        }
        return cells;
    }
    throw std::invalid_argument("unknown table: " + which);
}

std::vector<OutputRecord> run_table(const std::string& which, std::uint64_t seed, int runs,
                                    int workers, kernels::Choice kernel) {
    std::vector<OutputRecord> records;
    std::uint64_t cell_id = which == "random" ? 0 : (which == "burst" ? 1000 : 2000);
    for (const TableCell& cell : table_cells(which)) {
        CampaignConfig cfg;
        cfg.function = cell.function;
        cfg.settings = default_settings(cell.function);
        cfg.fault = FaultSpec{cell.model, cell.type, cell.n, cell.m};
        cfg.runs = runs;
        cfg.seed = derive_run_seed(seed, 0xAB1Eull * ++cell_id);
        cfg.workers = workers;
        cfg.kernel = kernel;
        const CampaignStats stats = run_detection_campaign(cfg);

        OutputRecord rec;
        rec.function = to_string(cell.function);
        rec.model = to_string(cell.model);
        rec.type = to_string(cell.type);
        rec.n = cell.n;
        rec.m = is_bit_level(cell.model) ? cell.m : 0;
        rec.terms = cfg.settings.term_count;
        rec.epsilon = cfg.settings.epsilon;
        rec.runs = stats.runs;
        rec.seed = cfg.seed;
        rec.detected = stats.detected_count;
        rec.benign = stats.benign_count;
        rec.silent = stats.silent_count;
        rec.ratio = stats.coverage_ratio;
        records.push_back(rec);
    }
    return records;
}

}  // namespace actcheck
