#include "actcheck/report.hpp"

#include <charconv>
#include <cstdio>

#include <json.hpp>

namespace actcheck {

bool format_from_string(const std::string& name, OutputFormat& out) {
    if (name == "csv") out = OutputFormat::Csv;
    else if (name == "json") out = OutputFormat::Json;
    else return false;
    return true;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

namespace {

std::string format_ratio(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
    return nlohmann::ordered_json{
        {"function", r.function}, {"model", r.model},     {"type", r.type},
        {"n", r.n},               {"m", r.m},             {"terms", r.terms},
        {"epsilon", r.epsilon},   {"runs", r.runs},       {"seed", r.seed},
        {"detected", r.detected}, {"benign", r.benign},   {"silent", r.silent},
        {"ratio", r.ratio},
    };
}

}  // namespace

std::string csv_header() {
    return "function,model,type,n,m,terms,epsilon,runs,seed,detected,benign,silent,ratio";
}

std::string to_csv_row(const OutputRecord& r) {
    std::string row;
    row += r.function;
    row += ',';
    row += r.model;
    row += ',';
    row += r.type;
    row += ',';
    row += std::to_string(r.n);
    row += ',';
    row += std::to_string(r.m);
    row += ',';
    row += std::to_string(r.terms);
    row += ',';
    row += format_double(r.epsilon);
    row += ',';
    row += std::to_string(r.runs);
    row += ',';
    row += std::to_string(r.seed);
    row += ',';
    row += std::to_string(r.detected);
    row += ',';
    row += std::to_string(r.benign);
    row += ',';
    row += std::to_string(r.silent);
    row += ',';
    row += format_ratio(r.ratio);
    return row;
}

void write_records(std::ostream& os, const std::vector<OutputRecord>& records,
                   OutputFormat format) {
    if (format == OutputFormat::Csv) {
        os << csv_header() << '\n';
        for (const OutputRecord& r : records) os << to_csv_row(r) << '\n';
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const OutputRecord& r : records) arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
}

}  // namespace actcheck
