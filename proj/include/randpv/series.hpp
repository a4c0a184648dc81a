// Plot-data carrier shared by the power, grouptest and multiple modules,
// with CSV and JSON emitters. The CSV layout is fixed: x,y,kind,theta,c.

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace randpv {

struct CurveSeries {
    std::vector<double> x;
    std::vector<double> y;
    // free-form metadata; the keys "kind", "theta" and "c" are required for
    // CSV output and become per-row constant columns
    std::map<std::string, std::string> labels;
};

// Shortest round-trip decimal representation, locale-independent.
std::string format_double(double value);

std::string to_csv(const std::vector<CurveSeries>& series);
std::string to_json(const std::vector<CurveSeries>& series);

// Writes via a sibling temp file plus rename, so readers never observe a
// partially written artifact.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace randpv
