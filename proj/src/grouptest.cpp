#include "randpv/grouptest.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "randpv/power.hpp"

namespace randpv {

void validate(const GroupDesign& design) {
    if (design.g < 1) throw std::domain_error("GroupDesign: g must be >= 1");
    if (!(design.s >= 1.0)) throw std::domain_error("GroupDesign: s must be >= 1");
    if (!(design.se >= 0.0 && design.se <= 1.0 && design.sp >= 0.0 &&
          design.sp <= 1.0))
        throw std::domain_error("GroupDesign: se and sp must lie in [0,1]");
    if (!(design.se + design.sp > 1.0))
        throw std::domain_error("GroupDesign: se + sp must exceed 1");
}

double pi_from_theta(double theta, const GroupDesign& design) {
    validate(design);
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::domain_error("pi_from_theta: theta must lie in [0,1]");
    return design.se +
           (1.0 - design.se - design.sp) * std::pow(1.0 - theta, design.s);
}

double theta_mle(double pi_hat, const GroupDesign& design) {
    validate(design);
    if (!(pi_hat >= 0.0 && pi_hat <= 1.0))
        throw std::domain_error("theta_mle: pi_hat must lie in [0,1]");
    // ratio = (1 - theta)^s solved from the pi link; both numerator and
    // denominator are negative for an informative design
    const double ratio = (pi_hat - design.se) / (1.0 - design.se - design.sp);
    if (ratio <= 0.0) return 1.0;  // pi_hat above the attainable ceiling se
    if (ratio >= 1.0) return 0.0;  // pi_hat below the floor 1 - sp
    return 1.0 - std::pow(ratio, 1.0 / design.s);
}

OneSidedProblem translate_problem(double theta_star, const GroupDesign& design) {
    validate(design);
    if (!(theta_star > 0.0 && theta_star < 1.0))
        throw std::domain_error("translate_problem: theta_star must lie in (0,1)");
    const double pi_star = pi_from_theta(theta_star, design);
    if (!(pi_star > 0.0 && pi_star < 1.0))
        throw std::domain_error("translate_problem: degenerate design, pi* hit 0 or 1");
    return OneSidedProblem{design.g, pi_star, Tail::upper};
}

namespace {

double group_power(PValueKind kind, double theta_star, double theta_alt,
                   double alpha, double c, const GroupDesign& design) {
    const OneSidedProblem problem = translate_problem(theta_star, design);
    const double pi_alt = pi_from_theta(theta_alt, design);
    return cdf(kind, problem, pi_alt, alpha, c);
}

std::map<std::string, std::string> group_labels(PValueKind kind,
                                                double theta_alt, double c,
                                                const GroupDesign& design,
                                                const char* sweep) {
    return {{"kind", kind_name(kind)},
            {"theta", format_double(theta_alt)},
            {"c", format_double(c)},
            {"se", format_double(design.se)},
            {"sp", format_double(design.sp)},
            {"sweep", sweep}};
}

}  // namespace

CurveSeries power_fixed_inspections(PValueKind kind, double theta_star,
                                    double theta_alt, double alpha, double c,
                                    const GroupDesign& base,
                                    const std::vector<double>& s_range) {
    for (std::size_t i = 1; i < s_range.size(); ++i)
        if (s_range[i] <= s_range[i - 1])
            throw std::invalid_argument(
                "power_fixed_inspections: s_range must be ascending");
    CurveSeries series;
    for (const double s : s_range) {
        GroupDesign design = base;
        design.s = s;
        series.x.push_back(s);
        double y;
        try {
            y = group_power(kind, theta_star, theta_alt, alpha, c, design);
        } catch (const std::domain_error&) {
            y = std::numeric_limits<double>::quiet_NaN();
        }
        series.y.push_back(y);
    }
    series.labels = group_labels(kind, theta_alt, c, base, "s");
    return series;
}

CurveSeries power_fixed_individuals(PValueKind kind, double theta_star,
                                    double theta_alt, double alpha, double c,
                                    int n_total,
                                    const std::vector<int>& g_sequence,
                                    double se, double sp) {
    if (n_total < 1)
        throw std::domain_error("power_fixed_individuals: n_total must be >= 1");
    CurveSeries series;
    for (const int g : g_sequence) {
        if (g < 1)
            throw std::domain_error("power_fixed_individuals: g must be >= 1");
        const GroupDesign design{g, (double)n_total / (double)g, se, sp};
        series.x.push_back(design.s);
        double y;
        try {
            y = group_power(kind, theta_star, theta_alt, alpha, c, design);
        } catch (const std::domain_error&) {
            y = std::numeric_limits<double>::quiet_NaN();
        }
        series.y.push_back(y);
    }
    series.labels = group_labels(kind, theta_alt, c,
                                 GroupDesign{1, 1.0, se, sp}, "s_from_fixed_n");
    return series;
}

}  // namespace randpv
