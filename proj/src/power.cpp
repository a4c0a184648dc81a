#include "randpv/power.hpp"

#include <stdexcept>

namespace randpv {

void validate(const PowerQuery& query) {
    if (!(query.alpha > 0.0 && query.alpha < 1.0))
        throw std::domain_error("PowerQuery: alpha must lie strictly in (0,1)");
    if (!(query.theta_alt > 0.0 && query.theta_alt < 1.0))
        throw std::domain_error("PowerQuery: theta_alt must lie strictly in (0,1)");
    if (!(query.theta_star > 0.0 && query.theta_star < 1.0))
        throw std::domain_error("PowerQuery: theta_star must lie strictly in (0,1)");
    if (!(query.c >= 0.0 && query.c <= 1.0))
        throw std::domain_error("PowerQuery: c must lie in [0,1]");
}

double power(const PowerQuery& query, int n) {
    validate(query);
    const OneSidedProblem problem{n, query.theta_star, Tail::upper};
    return cdf(query.kind, problem, query.theta_alt, query.alpha, query.c);
}

CurveSeries power_vs_n(const PowerQuery& query, const std::vector<int>& n_range) {
    validate(query);
    if (n_range.empty())
        throw std::invalid_argument("power_vs_n: n_range must be nonempty");
    for (std::size_t i = 1; i < n_range.size(); ++i)
        if (n_range[i] <= n_range[i - 1])
            throw std::invalid_argument("power_vs_n: n_range must be ascending");
    CurveSeries series;
    series.x.reserve(n_range.size());
    series.y.reserve(n_range.size());
    for (const int n : n_range) {
        series.x.push_back((double)n);
        series.y.push_back(power(query, n));
    }
    series.labels = {{"kind", kind_name(query.kind)},
                     {"theta", format_double(query.theta_alt)},
                     {"c", format_double(query.c)},
                     {"theta_star", format_double(query.theta_star)},
                     {"alpha", format_double(query.alpha)},
                     {"sweep", "n"}};
    return series;
}

CurveSeries cdf_curve(PValueKind kind, const OneSidedProblem& problem,
                      double theta, double c, const std::vector<double>& t_grid) {
    validate(problem);
    CurveSeries series;
    series.x.reserve(t_grid.size());
    series.y.reserve(t_grid.size());
    for (const double t : t_grid) {
        series.x.push_back(t);
        series.y.push_back(cdf(kind, problem, theta, t, c));
    }
    series.labels = {{"kind", kind_name(kind)},
                     {"theta", format_double(theta)},
                     {"c", format_double(c)},
                     {"theta_star", format_double(problem.theta_star)},
                     {"n", std::to_string(problem.n)},
                     {"sweep", "t"}};
    return series;
}

const char* kind_name(PValueKind kind) {
    switch (kind) {
        case PValueKind::lfc: return "lfc";
        case PValueKind::rand1: return "rand1";
        case PValueKind::pt: return "pt";
        case PValueKind::rand2: return "rand2";
    }
    throw std::invalid_argument("kind_name: unknown p-value kind");
}

PValueKind parse_kind(const std::string& name) {
    if (name == "lfc") return PValueKind::lfc;
    if (name == "rand1") return PValueKind::rand1;
    if (name == "pt" || name == "ump") return PValueKind::pt;
    if (name == "rand2") return PValueKind::rand2;
    throw std::invalid_argument("unknown p-value kind '" + name +
                                "' (expected lfc, rand1, pt or rand2)");
}

std::vector<PowerDrop> nonmonotonicity_report(const CurveSeries& series) {
    std::vector<PowerDrop> drops;
    for (std::size_t i = 1; i < series.y.size(); ++i) {
        const double d = series.y[i - 1] - series.y[i];
        if (d > 0.0) drops.push_back({series.x[i], d});
    }
    return drops;
}

}  // namespace randpv
