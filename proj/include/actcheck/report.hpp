#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace actcheck {

// One self-describing result row; empty model/type fields mean a fault-free
// scenario. ratio carries the coverage ratio for fault campaigns and the
// consistency ratio for sweeps.
struct OutputRecord {
    std::string function;
    std::string model = "none";
    std::string type = "none";
    int n = 0;
    int m = 0;
    int terms = 0;
    double epsilon = 0.0;
    long runs = 0;
    std::uint64_t seed = 0;
    long detected = 0;
    long benign = 0;
    long silent = 0;
    double ratio = 0.0;
};

enum class OutputFormat { Csv, Json };

bool format_from_string(const std::string& name, OutputFormat& out);

std::string csv_header();
std::string to_csv_row(const OutputRecord& rec);
void write_records(std::ostream& os, const std::vector<OutputRecord>& records, OutputFormat format);

// Formats a double the way records do (shortest round-trip form).
std::string format_double(double v);

}  // namespace actcheck
