#include "actcheck/campaign.hpp"

#include <atomic>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace actcheck {

namespace {

constexpr std::size_t kBlockRuns = 1024;

int eval_kind(ActivationKind kind) {
    switch (kind) {
        case ActivationKind::Expo: return 0;
        case ActivationKind::Sigmoid: return 1;
        default: return 2;
    }
}

struct Counts {
    long detected = 0;
    long benign = 0;
    long silent = 0;
    long pass = 0;
};

// Scratch buffers for one block of runs.
struct BlockBuffers {
    std::vector<double> args, terms, fterms;
    std::vector<double> pos, neg, value, checker, residual;
    std::vector<double> fpos, fneg, fvalue, fchecker, fresidual;
    std::vector<RandomStream> streams;

    void resize(std::size_t count, int n_terms) {
        args.resize(count);
        terms.resize(count * static_cast<std::size_t>(n_terms));
        fterms.resize(count * static_cast<std::size_t>(n_terms));
        for (auto* v : {&pos, &neg, &value, &checker, &residual, &fpos, &fneg, &fvalue, &fchecker,
                        &fresidual}) {
            v->resize(count);
        }
    }
};

// Splits [0, runs) into blocks handed out by an atomic counter; integer
// counts are merged commutatively, so results do not depend on the worker
// count or scheduling.
template <typename BlockFn>
Counts run_blocks(long runs, int workers, BlockFn&& block_fn) {
    const long block_count = (runs + static_cast<long>(kBlockRuns) - 1) / static_cast<long>(kBlockRuns);
    std::atomic<long> next{0};
    std::vector<Counts> partial(static_cast<std::size_t>(workers > 0 ? workers : 1));

    auto work = [&](int worker) {
        BlockBuffers buffers;
        Counts local;
        for (;;) {
            const long b = next.fetch_add(1);
            if (b >= block_count) break;
            const long lo = b * static_cast<long>(kBlockRuns);
            const long hi = std::min(runs, lo + static_cast<long>(kBlockRuns));
            block_fn(lo, hi, buffers, local);
        }
        partial[static_cast<std::size_t>(worker)] = local;
    };

    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    Counts total;
    for (const Counts& c : partial) {
        total.detected += c.detected;
        total.benign += c.benign;
        total.silent += c.silent;
        total.pass += c.pass;
    }
    return total;
}

void apply_fault_column(std::vector<double>& terms, std::size_t count, std::size_t lane,
                        const FaultPlan& plan, FaultModel model, RandomStream& rng) {
    for (const FaultTarget& target : plan.targets) {
        const std::size_t at = static_cast<std::size_t>(target.term_index) * count + lane;
        FloatWord word = FloatWord::from_double(terms[at]);
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
        terms[at] = word.to_double();
    }
}

}  // namespace

std::string validate(const CampaignConfig& cfg) {
    if (cfg.function == ActivationKind::Relu) return "function: relu has no series campaign";
    if (cfg.runs < 1) return "runs must be >= 1";
    if (cfg.settings.term_count < 1) return "terms must be >= 1";
    if (!(cfg.settings.epsilon > 0.0)) return "epsilon must be > 0";
    if (!(cfg.input_lo < cfg.input_hi)) return "input range is empty";
    if (cfg.workers < 1) return "workers must be >= 1";
    if (cfg.benign_threshold < 0.0) return "benign-threshold must be >= 0";
    if (cfg.fault) {
        if (cfg.fault->faulty_terms < 1) return "n must be >= 1";
        if (cfg.fault->faulty_terms > cfg.settings.term_count) return "n exceeds terms";
        if (is_bit_level(cfg.fault->model) &&
            (cfg.fault->bits_per_term < 1 || cfg.fault->bits_per_term > 64)) {
            return "m must be in [1, 64]";
        }
    }
    return {};
}

CampaignStats run_detection_campaign(const CampaignConfig& cfg) {
    if (std::string err = validate(cfg); !err.empty()) throw std::invalid_argument(err);
    if (!cfg.fault) throw std::invalid_argument("fault spec required for a detection campaign");

    const kernels::Ops& ops = kernels::select(cfg.kernel);
    const int n_terms = cfg.settings.term_count;
    const int kind = eval_kind(cfg.function);
    const FaultSpec spec = *cfg.fault;
    const double eps = cfg.settings.epsilon;

    auto block_fn = [&](long lo, long hi, BlockBuffers& b, Counts& counts) {
        const std::size_t count = static_cast<std::size_t>(hi - lo);
        b.resize(count, n_terms);
        b.streams.clear();
        for (long i = lo; i < hi; ++i) {
            RandomStream rs(derive_run_seed(cfg.seed, static_cast<std::uint64_t>(i)));
            const double x = rs.uniform(cfg.input_lo, cfg.input_hi);
            b.args[static_cast<std::size_t>(i - lo)] = series_argument(cfg.function, x, cfg.settings);
            b.streams.push_back(rs);
        }

        ops.build_terms(b.args.data(), count, n_terms, b.terms.data());
        ops.sum_exp_pair(b.terms.data(), count, n_terms, b.pos.data(), b.neg.data());
        ops.eval_protected(kind, b.pos.data(), b.neg.data(), count, b.value.data(),
                           b.checker.data(), b.residual.data());

        std::memcpy(b.fterms.data(), b.terms.data(), b.terms.size() * sizeof(double));
        for (std::size_t lane = 0; lane < count; ++lane) {
            const FaultPlan plan = plan_faults(spec, n_terms, b.streams[lane]);
            apply_fault_column(b.fterms, count, lane, plan, spec.model, b.streams[lane]);
        }

        ops.sum_exp_pair(b.fterms.data(), count, n_terms, b.fpos.data(), b.fneg.data());
        ops.eval_protected(kind, b.fpos.data(), b.fneg.data(), count, b.fvalue.data(),
                           b.fchecker.data(), b.fresidual.data());

        for (std::size_t lane = 0; lane < count; ++lane) {
            const bool ok = b.fresidual[lane] <= eps && std::isfinite(b.fvalue[lane]) &&
                            std::isfinite(b.fchecker[lane]);
            if (!ok) {
                ++counts.detected;
                continue;
            }
            const double deviation = std::fabs(b.fvalue[lane] - b.value[lane]);
            if (deviation <= cfg.benign_threshold) {
                ++counts.benign;
            } else {
                ++counts.silent;  // NaN deviation lands here
            }
        }
    };

    const Counts total = run_blocks(cfg.runs, cfg.workers, block_fn);

    CampaignStats stats;
    stats.runs = cfg.runs;
    stats.detected_count = total.detected;
    stats.benign_count = total.benign;
    stats.silent_count = total.silent;
    const double n = static_cast<double>(cfg.runs);
    stats.detection_ratio = static_cast<double>(total.detected) / n;
    stats.coverage_ratio = static_cast<double>(total.detected + total.benign) / n;
    stats.consistency_ratio = 0.0;
    return stats;
}

std::vector<ConsistencyCell> run_consistency_sweep(ActivationKind function,
                                                   const std::vector<int>& term_counts,
                                                   const std::vector<double>& epsilons, int runs,
                                                   std::uint64_t seed, int workers,
                                                   kernels::Choice kernel) {
    if (function == ActivationKind::Relu) throw std::invalid_argument("function: relu has no sweep");
    if (term_counts.empty()) throw std::invalid_argument("terms range is empty");
    if (epsilons.empty()) throw std::invalid_argument("epsilons list is empty");
    for (double e : epsilons) {
        if (!(e > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    }
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");

    const kernels::Ops& ops = kernels::select(kernel);
    const int kind = eval_kind(function);

    std::vector<ConsistencyCell> cells;
    for (int n_terms : term_counts) {
        if (n_terms < 1) throw std::invalid_argument("terms must be >= 1");
        SeriesSettings settings;
        settings.term_count = n_terms;

        // Every epsilon of this row sees exactly the same inputs, so the
        // pass count is non-decreasing in epsilon.
        std::vector<long> pass(epsilons.size(), 0);
        const std::uint64_t row_seed =
            derive_run_seed(seed, 0xC0FFEEull ^ (static_cast<std::uint64_t>(n_terms) << 32));

        const long total_runs = runs;
        const long block_count =
            (total_runs + static_cast<long>(kBlockRuns) - 1) / static_cast<long>(kBlockRuns);
        std::atomic<long> next{0};
        const int w_count = workers > 0 ? workers : 1;
        std::vector<std::vector<long>> tallies(static_cast<std::size_t>(w_count),
                                               std::vector<long>(epsilons.size(), 0));

        auto work = [&](int worker) {
            BlockBuffers b;
            auto& tally = tallies[static_cast<std::size_t>(worker)];
            for (;;) {
                const long blk = next.fetch_add(1);
                if (blk >= block_count) break;
                const long lo = blk * static_cast<long>(kBlockRuns);
                const long hi = std::min(total_runs, lo + static_cast<long>(kBlockRuns));
                const std::size_t count = static_cast<std::size_t>(hi - lo);
                b.resize(count, n_terms);
                for (long i = lo; i < hi; ++i) {
                    RandomStream rs(derive_run_seed(row_seed, static_cast<std::uint64_t>(i)));
                    const double x = rs.uniform(-3.0, 3.0);
                    b.args[static_cast<std::size_t>(i - lo)] =
                        series_argument(function, x, settings);
                }
                ops.build_terms(b.args.data(), count, n_terms, b.terms.data());
                ops.sum_exp_pair(b.terms.data(), count, n_terms, b.pos.data(), b.neg.data());
                ops.eval_protected(kind, b.pos.data(), b.neg.data(), count, b.value.data(),
                                   b.checker.data(), b.residual.data());
                for (std::size_t lane = 0; lane < count; ++lane) {
                    const bool finite =
                        std::isfinite(b.value[lane]) && std::isfinite(b.checker[lane]);
                    if (!finite) continue;
                    for (std::size_t e = 0; e < epsilons.size(); ++e) {
                        if (b.residual[lane] <= epsilons[e]) ++tally[e];
                    }
                }
            }
        };

        if (w_count <= 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < w_count; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        for (const auto& tally : tallies) {
            for (std::size_t e = 0; e < pass.size(); ++e) pass[e] += tally[e];
        }

        for (std::size_t e = 0; e < epsilons.size(); ++e) {
            ConsistencyCell cell;
            cell.term_count = n_terms;
            cell.epsilon = epsilons[e];
            cell.runs = runs;
            cell.pass_count = pass[e];
            cell.consistency_ratio = static_cast<double>(pass[e]) / static_cast<double>(runs);
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace actcheck
