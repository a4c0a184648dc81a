// Exact power computation and curve sweeps. Power is the analytic CDF of the
// chosen p-value evaluated at the significance level under the alternative;
// no Monte Carlo is involved, so curves are deterministic.

#pragma once

#include <vector>

#include "randpv/pvalues.hpp"
#include "randpv/series.hpp"

namespace randpv {

struct PowerQuery {
    PValueKind kind = PValueKind::pt;
    double theta_star = 0.5;
    double theta_alt = 0.5;
    double alpha = 0.05;
    double c = 0.5;
};

void validate(const PowerQuery& query);

double power(const PowerQuery& query, int n);

// One exact power value per sample size; n_range must be nonempty ascending.
CurveSeries power_vs_n(const PowerQuery& query, const std::vector<int>& n_range);

CurveSeries cdf_curve(PValueKind kind, const OneSidedProblem& problem,
                      double theta, double c, const std::vector<double>& t_grid);

// Human-readable names for PValueKind, and the reverse mapping.
const char* kind_name(PValueKind kind);
PValueKind parse_kind(const std::string& name);

struct PowerDrop {
    double x;     // grid point where the series decreases
    double drop;  // magnitude of the decrease (positive)
};

// Every adjacent decrease of y along the series; empty iff nondecreasing.
std::vector<PowerDrop> nonmonotonicity_report(const CurveSeries& series);

}  // namespace randpv
