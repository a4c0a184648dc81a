#include "randpv/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>

#include "randpv/series.hpp"

namespace randpv {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (const char ch : line) {
        if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    fields.push_back(field);
    return fields;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return (char)std::tolower(ch); });
    return s;
}

long long parse_count(const std::string& field, const char* column, int row) {
    long long value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ParseError("row " + std::to_string(row) + ": '" + field +
                         "' is not a valid " + column + " count");
    if (value < 0)
        throw ParseError("row " + std::to_string(row) + ": negative " +
                         std::string(column) + " count");
    return value;
}

}  // namespace

StrataData load_strata(const std::filesystem::path& path, double theta_star) {
    if (!(theta_star > 0.0 && theta_star < 1.0))
        throw std::domain_error("load_strata: theta_star must lie in (0,1)");
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw ParseError(path.string() + ": empty file, expected a header row");

    const auto header = split_csv_line(line);
    int col_name = -1, col_confirmed = -1, col_deaths = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string h = lower(header[i]);
        if (h == "region" || h == "name") col_name = (int)i;
        if (h == "confirmed") col_confirmed = (int)i;
        if (h == "deaths") col_deaths = (int)i;
    }
    if (col_name < 0 || col_confirmed < 0 || col_deaths < 0)
        throw ParseError(path.string() +
                         ": header must name the region, confirmed and deaths "
                         "columns");

    StrataData data;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ParseError("row " + std::to_string(row) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        const long long confirmed =
            parse_count(fields[col_confirmed], "confirmed", row);
        const long long deaths = parse_count(fields[col_deaths], "deaths", row);
        if (deaths > confirmed)
            throw ParseError("row " + std::to_string(row) + " (" +
                             fields[col_name] + "): deaths exceed confirmed");
        if (confirmed == 0) continue;  // no information, drop the stratum
        if (confirmed > std::numeric_limits<int>::max())
            throw ParseError("row " + std::to_string(row) +
                             ": confirmed count too large");
        Stratum st;
        st.n = (int)confirmed;
        st.theta = (double)deaths / (double)confirmed;
        st.theta_star = theta_star;
        st.count = (int)deaths;
        data.problem.strata.push_back(st);
        data.names.push_back(fields[col_name]);
    }
    if (data.problem.strata.empty())
        throw ParseError(path.string() + ": no usable strata found");
    return data;
}

void write_strata(const StrataData& data, const std::filesystem::path& path) {
    std::string out = "region,confirmed,deaths\n";
    for (std::size_t i = 0; i < data.problem.strata.size(); ++i) {
        const Stratum& st = data.problem.strata[i];
        out += data.names[i];
        out += ',';
        out += std::to_string(st.n);
        out += ',';
        out += std::to_string(st.count.value_or(0));
        out += '\n';
    }
    write_atomic(path, out);
}

}  // namespace randpv
