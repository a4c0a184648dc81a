// CSV ingestion of stratified count data (region, confirmed, deaths) into a
// MultipleProblem. Columns are located by header name, case-insensitively and
// in any order. Rows with zero confirmed cases carry no information for a
// death-rate test and are dropped; every other defect is a ParseError naming
// the offending row.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "randpv/multiple.hpp"

namespace randpv {

struct StratumRecord {
    std::string name;
    long long confirmed = 0;
    long long deaths = 0;
};

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct StrataData {
    MultipleProblem problem;
    std::vector<std::string> names;  // parallel to problem.strata
};

// Sets n_i = confirmed, theta_i = deaths/confirmed, theta_star_i = theta_star
// and count_i = deaths for every kept row.
StrataData load_strata(const std::filesystem::path& path, double theta_star);

// Emits the same CSV layout load_strata reads, enabling round trips.
void write_strata(const StrataData& data, const std::filesystem::path& path);

}  // namespace randpv
