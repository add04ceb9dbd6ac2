#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "actcheck/campaign.hpp"
#include "actcheck/report.hpp"
#include "actcheck/softfloat.hpp"
#include "actcheck/tables.hpp"

namespace {

using namespace actcheck;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;

struct CommonFlags {
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    int workers = 1;
    std::string kernel = "auto";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", flags.out, "Write records to this file instead of stdout");
    cmd->add_option("--seed", flags.seed, "Master seed for all random draws");
    cmd->add_option("--workers", flags.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--kernel", flags.kernel, "Kernel backend: auto, scalar, avx2, neon")
        ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
}

int emit(const CommonFlags& flags, const std::vector<OutputRecord>& records) {
    OutputFormat fmt = OutputFormat::Csv;
    format_from_string(flags.format, fmt);
    if (flags.out.empty()) {
        write_records(std::cout, records, fmt);
        return std::cout ? kExitOk : kExitIo;
    }
    std::ofstream os(flags.out, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << flags.out << " for writing\n";
        return kExitIo;
    }
    write_records(os, records, fmt);
    return os ? kExitOk : kExitIo;
}

// "a:b" inclusive, or a single integer.
bool parse_term_range(const std::string& text, std::vector<int>& out) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            out.push_back(std::stoi(text));
            return true;
        }
        const int lo = std::stoi(text.substr(0, colon));
        const int hi = std::stoi(text.substr(colon + 1));
        if (lo > hi) return false;
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_epsilons(const std::string& text, std::vector<double>& out) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            return false;
        }
    }
    return !out.empty();
}

OutputRecord campaign_record(const CampaignConfig& cfg, const CampaignStats& stats) {
    OutputRecord rec;
    rec.function = to_string(cfg.function);
    rec.model = cfg.fault ? to_string(cfg.fault->model) : "none";
    rec.type = cfg.fault ? to_string(cfg.fault->type) : "none";
    rec.n = cfg.fault ? cfg.fault->faulty_terms : 0;
    rec.m = cfg.fault && is_bit_level(cfg.fault->model) ? cfg.fault->bits_per_term : 0;
    rec.terms = cfg.settings.term_count;
    rec.epsilon = cfg.settings.epsilon;
    rec.runs = stats.runs;
    rec.seed = cfg.seed;
    rec.detected = stats.detected_count;
    rec.benign = stats.benign_count;
    rec.silent = stats.silent_count;
    rec.ratio = stats.coverage_ratio;
    return rec;
}

std::string verdict_name(const ProtectedResult& res) {
    return res.detected() ? "FaultDetected" : "Pass";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Activation-function error detection: fault-injection campaigns,\n"
                 "consistency sweeps and single evaluations over cached series terms."};
    app.require_subcommand(1);

    // ---- campaign ----
    auto* campaign = app.add_subcommand("campaign", "Run a Monte-Carlo fault-injection campaign");
    CommonFlags camp_flags;
    std::string camp_function, camp_model, camp_type = "random";
    int camp_n = 1, camp_m = 1, camp_terms = 0, camp_runs = 1000;
    double camp_eps = 0.0, camp_lo = -3.0, camp_hi = 3.0, camp_benign = 0.0;
    campaign->add_option("--function", camp_function, "expo, sigmoid or tanh")
        ->required()
        ->check(CLI::IsMember({"expo", "sigmoid", "tanh"}));
    campaign->add_option("--model", camp_model, "bitflip, stuck0, stuck1, skip or random")
        ->required()
        ->check(CLI::IsMember({"bitflip", "stuck0", "stuck1", "skip", "random"}));
    campaign->add_option("--type", camp_type, "Bit selection: random or burst")
        ->check(CLI::IsMember({"random", "burst"}));
    campaign->add_option("--n", camp_n, "Number of faulty terms");
    campaign->add_option("--m", camp_m, "Bits per faulty term (bit-level models)");
    campaign->add_option("--terms", camp_terms, "Series term count (default per function)");
    campaign->add_option("--epsilon", camp_eps, "Round-off threshold (default per function)");
    campaign->add_option("--runs", camp_runs, "Runs in the campaign");
    campaign->add_option("--input-lo", camp_lo, "Input range lower bound");
    campaign->add_option("--input-hi", camp_hi, "Input range upper bound");
    campaign->add_option("--benign-threshold", camp_benign,
                         "Output deviation at or below this counts as benign");
    add_common(campaign, camp_flags);

    // ---- consistency ----
    auto* consistency =
        app.add_subcommand("consistency", "Fault-free sweep over term counts and thresholds");
    CommonFlags cons_flags;
    std::string cons_function, cons_terms = "5:50", cons_epsilons = "1e-10,1e-12,1e-14,1e-16";
    int cons_runs = 1000;
    consistency->add_option("--function", cons_function, "expo, sigmoid or tanh")
        ->required()
        ->check(CLI::IsMember({"expo", "sigmoid", "tanh"}));
    consistency->add_option("--terms", cons_terms, "Term range a:b (inclusive) or single value");
    consistency->add_option("--epsilons", cons_epsilons, "Comma-separated threshold list");
    consistency->add_option("--runs", cons_runs, "Runs per grid cell");
    add_common(consistency, cons_flags);

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "Evaluate one protected activation");
    CommonFlags eval_flags;
    std::string eval_function, eval_inject;
    double eval_x = 0.0, eval_eps = 0.0;
    int eval_terms = 0;
    std::optional<double> eval_forced;
    double eval_forced_value = 0.0;
    eval->add_option("--function", eval_function, "expo, sigmoid, tanh or relu")
        ->required()
        ->check(CLI::IsMember({"expo", "sigmoid", "tanh", "relu"}));
    eval->add_option("--x", eval_x, "Input value")->required();
    eval->add_option("--terms", eval_terms, "Series term count (default per function)");
    eval->add_option("--epsilon", eval_eps, "Round-off threshold (default per function)");
    auto* forced_opt = eval->add_option("--force-output", eval_forced_value,
                                        "Feed this forward value through the check");
    eval->add_option("--inject", eval_inject,
                     "Apply one fault before checking: model,type,n,m");
    add_common(eval, eval_flags);

    // ---- reproduce-tables ----
    auto* tables = app.add_subcommand(
        "reproduce-tables", "Run the full detection-ratio grids and write one file per table");
    CommonFlags tab_flags;
    std::string tab_outdir = ".";
    int tab_runs = 1000;
    tables->add_option("--outdir", tab_outdir, "Directory for the table files");
    tables->add_option("--runs", tab_runs, "Runs per cell");
    add_common(tables, tab_flags);

    // ---- f32 ----
    auto* f32 = app.add_subcommand("f32", "Spot-evaluate the single-precision datapath model");
    std::string f32_op, f32_terms_text, f32_mode = "sum";
    double f32_a = 0.0, f32_b = 0.0;
    int f32_negate_index = 0;
    f32->add_option("--op", f32_op, "mul, add, sub, div, recip or acc")
        ->required()
        ->check(CLI::IsMember({"mul", "add", "sub", "div", "recip", "acc"}));
    f32->add_option("--a", f32_a, "First operand");
    f32->add_option("--b", f32_b, "Second operand");
    f32->add_option("--terms", f32_terms_text, "acc: five comma-separated term values");
    f32->add_option("--mode", f32_mode, "acc: sum or negate")
        ->check(CLI::IsMember({"sum", "negate"}));
    f32->add_option("--negate-index", f32_negate_index, "acc: index negated in negate mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (campaign->parsed()) {
            CampaignConfig cfg;
            activation_from_string(camp_function, cfg.function);
            cfg.settings = default_settings(cfg.function);
            if (campaign->count("--terms")) cfg.settings.term_count = camp_terms;
            if (campaign->count("--epsilon")) cfg.settings.epsilon = camp_eps;
            FaultSpec spec;
            fault_model_from_string(camp_model, spec.model);
            injection_type_from_string(camp_type, spec.type);
            spec.faulty_terms = camp_n;
            spec.bits_per_term = camp_m;
            cfg.fault = spec;
            cfg.runs = camp_runs;
            cfg.input_lo = camp_lo;
            cfg.input_hi = camp_hi;
            cfg.seed = camp_flags.seed;
            cfg.workers = camp_flags.workers;
            cfg.benign_threshold = camp_benign;
            kernels::choice_from_string(camp_flags.kernel, cfg.kernel);
            if (std::string err = validate(cfg); !err.empty()) {
                std::cerr << "error: " << err << "\n";
                return kExitConfig;
            }
            return emit(camp_flags, {campaign_record(cfg, run_detection_campaign(cfg))});
        }

        if (consistency->parsed()) {
            ActivationKind fn;
            activation_from_string(cons_function, fn);
            std::vector<int> terms;
            if (!parse_term_range(cons_terms, terms)) {
                std::cerr << "error: --terms expects a:b with a <= b or a single integer\n";
                return kExitConfig;
            }
            std::vector<double> epsilons;
            if (!parse_epsilons(cons_epsilons, epsilons)) {
                std::cerr << "error: --epsilons expects a comma-separated list of numbers\n";
                return kExitConfig;
            }
            kernels::Choice kernel = kernels::Choice::Auto;
            kernels::choice_from_string(cons_flags.kernel, kernel);
            const auto cells = run_consistency_sweep(fn, terms, epsilons, cons_runs,
                                                     cons_flags.seed, cons_flags.workers, kernel);
            std::vector<OutputRecord> records;
            for (const ConsistencyCell& cell : cells) {
                OutputRecord rec;
                rec.function = cons_function;
                rec.terms = cell.term_count;
                rec.epsilon = cell.epsilon;
                rec.runs = cell.runs;
                rec.seed = cons_flags.seed;
                rec.detected = cell.runs - cell.pass_count;  // false alarms
                rec.benign = cell.pass_count;
                rec.ratio = cell.consistency_ratio;
                records.push_back(rec);
            }
            return emit(cons_flags, records);
        }

        if (eval->parsed()) {
            ActivationKind fn;
            activation_from_string(eval_function, fn);
            if (forced_opt->count()) eval_forced = eval_forced_value;

            ProtectedResult res;
            SeriesSettings settings = default_settings(fn);
            if (eval->count("--terms")) settings.term_count = eval_terms;
            if (eval->count("--epsilon")) settings.epsilon = eval_eps;

            if (fn == ActivationKind::Relu) {
                const double forward = eval_forced ? *eval_forced : relu_baseline(eval_x);
                res = relu_protected(eval_x, forward);
            } else {
                SeriesContext ctx(series_argument(fn, eval_x, settings), settings.term_count);
                if (!eval_inject.empty()) {
                    std::stringstream ss(eval_inject);
                    std::string ms, ts, ns, mbits;
                    std::getline(ss, ms, ',');
                    std::getline(ss, ts, ',');
                    std::getline(ss, ns, ',');
                    std::getline(ss, mbits, ',');
                    FaultSpec spec;
                    if (!fault_model_from_string(ms, spec.model) ||
                        !injection_type_from_string(ts, spec.type)) {
                        std::cerr << "error: --inject expects model,type,n,m\n";
                        return kExitConfig;
                    }
                    try {
                        spec.faulty_terms = std::stoi(ns);
                        spec.bits_per_term = std::stoi(mbits);
                    } catch (const std::exception&) {
                        std::cerr << "error: --inject expects model,type,n,m\n";
                        return kExitConfig;
                    }
                    RandomStream rng(eval_flags.seed);
                    const FaultPlan plan = plan_faults(spec, settings.term_count, rng);
                    ctx = apply_fault(ctx, plan, spec.model, rng);
                }
                const double eps = settings.epsilon;
                switch (fn) {
                    case ActivationKind::Expo:
                        res = eval_forced ? expo_check(*eval_forced, ctx, eps)
                                          : expo_protected(ctx, eps);
                        break;
                    case ActivationKind::Sigmoid:
                        res = eval_forced ? sigmoid_check(*eval_forced, ctx, eps)
                                          : sigmoid_protected(ctx, eps);
                        break;
                    default:
                        res = eval_forced ? tanh_check(*eval_forced, ctx, eps)
                                          : tanh_protected(ctx, eps);
                        break;
                }
            }

            OutputFormat fmt = OutputFormat::Csv;
            format_from_string(eval_flags.format, fmt);
            std::ostringstream body;
            if (fmt == OutputFormat::Csv) {
                body << "function,x,terms,epsilon,value,checker,residual,verdict\n"
                     << eval_function << ',' << format_double(eval_x) << ','
                     << settings.term_count << ',' << format_double(settings.epsilon) << ','
                     << format_double(res.value) << ',' << format_double(res.checker_value) << ','
                     << format_double(res.residual) << ',' << verdict_name(res) << '\n';
            } else {
                body << "{\"function\":\"" << eval_function << "\",\"x\":" << format_double(eval_x)
                     << ",\"terms\":" << settings.term_count
                     << ",\"epsilon\":" << format_double(settings.epsilon)
                     << ",\"value\":" << format_double(res.value)
                     << ",\"checker\":" << format_double(res.checker_value)
                     << ",\"residual\":" << format_double(res.residual) << ",\"verdict\":\""
                     << verdict_name(res) << "\"}\n";
            }
            if (eval_flags.out.empty()) {
                std::cout << body.str();
                return kExitOk;
            }
            std::ofstream os(eval_flags.out, std::ios::binary);
            if (!os) {
                std::cerr << "error: cannot open " << eval_flags.out << " for writing\n";
                return kExitIo;
            }
            os << body.str();
            return os ? kExitOk : kExitIo;
        }

        if (tables->parsed()) {
            kernels::Choice tab_kernel = kernels::Choice::Auto;
            kernels::choice_from_string(tab_flags.kernel, tab_kernel);
            const char* names[] = {"random", "burst", "skip_random"};
            for (const char* name : names) {
                std::cerr << "running table " << name << "...\n";
                const auto records =
                    run_table(name, tab_flags.seed, tab_runs, tab_flags.workers, tab_kernel);
                OutputFormat fmt = OutputFormat::Csv;
                format_from_string(tab_flags.format, fmt);
                const std::string path = tab_outdir + "/table_" + name +
                                         (fmt == OutputFormat::Csv ? ".csv" : ".json");
                std::ofstream os(path, std::ios::binary);
                if (!os) {
                    std::cerr << "error: cannot open " << path << " for writing\n";
                    return kExitIo;
                }
                write_records(os, records, fmt);
                if (!os) return kExitIo;
                std::cerr << "wrote " << path << "\n";
            }
            return kExitOk;
        }

        if (f32->parsed()) {
            using namespace actcheck::softfloat;
            Float32Word result;
            if (f32_op == "acc") {
                std::array<Float32Word, 5> terms{};
                std::stringstream ss(f32_terms_text);
                std::string item;
                std::size_t i = 0;
                while (std::getline(ss, item, ',') && i < terms.size()) {
                    terms[i++] = Float32Word::from_float(std::stof(item));
                }
                if (i != terms.size()) {
                    std::cerr << "error: --terms expects five comma-separated values\n";
                    return kExitConfig;
                }
                const AdderMode mode =
                    f32_mode == "negate" ? AdderMode::NegateOne : AdderMode::SumAll;
                result = multi_term_accumulate(terms, mode, f32_negate_index);
            } else {
                const Float32Word a = Float32Word::from_float(static_cast<float>(f32_a));
                const Float32Word b = Float32Word::from_float(static_cast<float>(f32_b));
                if (f32_op == "mul") result = f32_mul(a, b);
                else if (f32_op == "add") result = f32_add(a, b);
                else if (f32_op == "sub") result = f32_sub(a, b);
                else if (f32_op == "div") result = f32_div_nr(a, b);
                else result = f32_reciprocal_normalized(
                         Float32Word::compose(0, 127, a.significand()));
            }
            std::printf("value=%.9g pattern=0x%08X\n", static_cast<double>(result.to_float()),
                        result.raw);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
