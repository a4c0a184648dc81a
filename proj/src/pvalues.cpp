#include "randpv/pvalues.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace randpv {
namespace {

// Internal upper-tailed view of a problem. Lower-tailed tests reflect the
// statistic (k -> n - k) and every parameter (theta -> 1 - theta), after
// which the upper-tailed formulas apply verbatim.
struct UpperView {
    BinomialModel star;  // Bin(n, boundary) in the upper-tail orientation
    int n;
    bool reflected;

    explicit UpperView(const OneSidedProblem& p)
        : n(p.n), reflected(p.tail == Tail::lower) {
        star.n = p.n;
        star.theta = reflected ? 1.0 - p.theta_star : p.theta_star;
    }
    int stat(int t_obs) const { return reflected ? n - t_obs : t_obs; }
    BinomialModel at(double theta) const {
        return BinomialModel{n, reflected ? 1.0 - theta : theta};
    }
};

void require_stat(const UpperView& v, int t_obs) {
    if (t_obs < 0 || t_obs > v.n)
        throw std::domain_error("t_obs outside the support {0..n}");
}

void require_unit_open(double x, const char* name) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error(std::string(name) + " must lie strictly in (0,1)");
}

void require_unit_closed(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error(std::string(name) + " must lie in [0,1]");
}

// Support value s_k = 1 - F(k-) of the p_lfc atom at statistic k.
double support_value(const BinomialModel& star, int k) {
    return 1.0 - cdf(star, k - 1);
}

double p_lfc_upper(const UpperView& v, int t_obs) {
    return support_value(v.star, v.stat(t_obs));
}

// Exact step CDF of p_lfc: sum of theta-masses of atoms with value <= t.
// The atom set is {k : F*(k-) >= 1-t}; left_quantile locates its lower edge
// and the equality test decides whether the edge atom itself is included.
// Comparing in p-value space keeps the test bit-consistent with the doubles
// lfc_support and c_star produce.
double p_lfc_cdf_upper(const UpperView& v, const BinomialModel& th, double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const int q = left_quantile(v.star, 1.0 - t);
    if (support_value(v.star, q) == t) return 1.0 - cdf(th, q - 1);
    return 1.0 - cdf(th, q);
}

double c_star_upper(const UpperView& v, double c) {
    if (c <= 0.0) return 0.0;
    if (c >= 1.0) return 1.0;  // s_0 = 1 is always a support point
    // smallest k with s_k <= c, seeded by the quantile and then pinned down
    // exactly in p-value space (the seed can be off by one ulp-induced step)
    int k = quantile(v.star, 1.0 - c) + 1;
    while (k <= v.n && support_value(v.star, k) > c) ++k;
    while (k >= 1 && support_value(v.star, k - 1) <= c) --k;
    if (k > v.n) return 0.0;  // even the smallest support point exceeds c
    return support_value(v.star, k);
}

double pt_rand_cdf_upper(const UpperView& v, const BinomialModel& th,
                         double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const int y = quantile(v.star, 1.0 - t);
    const double tail = 1.0 - cdf(th, y);
    const double numer = cdf(v.star, y) - (1.0 - t);
    const double f_star = pmf(v.star, y);
    double correction;
    if (f_star > 0.0) {
        const double g = std::clamp(numer / f_star, 0.0, 1.0);
        correction = g * pmf(th, y);
    } else {
        // f* underflowed; move the pmf ratio into log space
        const double log_ratio = log_pmf(th, y) - log_pmf(v.star, y);
        if (!std::isfinite(log_ratio))
            throw std::runtime_error("pt_rand_cdf: pmf ratio not computable");
        correction = std::max(numer, 0.0) * std::exp(log_ratio);
    }
    return std::clamp(tail + correction, 0.0, 1.0);
}

}  // namespace

void validate(const OneSidedProblem& problem) {
    if (problem.n < 1) throw std::domain_error("OneSidedProblem: n must be >= 1");
    if (!(problem.theta_star > 0.0 && problem.theta_star < 1.0))
        throw std::domain_error(
            "OneSidedProblem: theta_star must lie strictly in (0,1)");
}

double p_lfc(const OneSidedProblem& problem, int t_obs) {
    validate(problem);
    const UpperView v(problem);
    require_stat(v, t_obs);
    return p_lfc_upper(v, t_obs);
}

double p_lfc_cdf(const OneSidedProblem& problem, double theta, double t) {
    validate(problem);
    require_unit_open(theta, "theta");
    require_unit_closed(t, "t");
    const UpperView v(problem);
    return p_lfc_cdf_upper(v, v.at(theta), t);
}

SupportTable lfc_support(const OneSidedProblem& problem) {
    validate(problem);
    const UpperView v(problem);
    SupportTable table;
    table.points.reserve(v.n + 1);
    double cum = 0.0;
    for (int k = v.n; k >= 0; --k) {  // ascending p-values
        const double s = support_value(v.star, k);
        const double m = pmf(v.star, k);
        cum += m;
        if (!table.points.empty() && table.points.back().p_value == s) {
            // values tied at double precision collapse into one atom
            table.points.back().mass += m;
            table.points.back().cum_prob = cum;
        } else {
            table.points.push_back({s, m, cum});
        }
    }
    return table;
}

double c_star(const OneSidedProblem& problem, double c) {
    validate(problem);
    require_unit_closed(c, "c");
    return c_star_upper(UpperView(problem), c);
}

double rand1(const OneSidedProblem& problem, int t_obs,
             const RandomizationInput& rin) {
    validate(problem);
    const UpperView v(problem);
    require_stat(v, t_obs);
    require_unit_open(rin.u, "u");
    require_unit_closed(rin.c, "c");
    if (rin.c == 0.0) return rin.u;
    const double s_star = c_star_upper(v, rin.c);
    if (s_star == 0.0) return rin.u;
    const double p = p_lfc_upper(v, t_obs);
    return p <= s_star ? p / s_star : rin.u;
}

double rand1_cdf(const OneSidedProblem& problem, double theta, double t,
                 double c) {
    validate(problem);
    require_unit_open(theta, "theta");
    require_unit_closed(t, "t");
    require_unit_closed(c, "c");
    if (c == 0.0) return t;
    const UpperView v(problem);
    const double s_star = c_star_upper(v, c);
    if (s_star == 0.0) return t;
    const BinomialModel th = v.at(theta);
    return t * (1.0 - p_lfc_cdf_upper(v, th, s_star)) +
           p_lfc_cdf_upper(v, th, t * s_star);
}

double pt_rand(const OneSidedProblem& problem, int t_obs,
               const RandomizationInput& rin) {
    validate(problem);
    const UpperView v(problem);
    require_stat(v, t_obs);
    require_unit_open(rin.u, "u");
    const int k = v.stat(t_obs);
    return (1.0 - cdf(v.star, k)) + rin.u * pmf(v.star, k);
}

double pt_rand_cdf(const OneSidedProblem& problem, double theta, double t) {
    validate(problem);
    require_unit_open(theta, "theta");
    require_unit_closed(t, "t");
    const UpperView v(problem);
    return pt_rand_cdf_upper(v, v.at(theta), t);
}

double rand2(const OneSidedProblem& problem, int t_obs,
             const RandomizationInput& rin) {
    validate(problem);
    const UpperView v(problem);
    require_stat(v, t_obs);
    require_unit_open(rin.u, "u");
    require_unit_closed(rin.c, "c");
    if (!rin.u_tilde)
        throw std::invalid_argument("rand2 requires the u_tilde draw");
    require_unit_open(*rin.u_tilde, "u_tilde");
    if (rin.c == 0.0) return *rin.u_tilde;
    const double q = pt_rand(problem, t_obs, rin);
    return q < rin.c ? q / rin.c : *rin.u_tilde;
}

double rand2_cdf(const OneSidedProblem& problem, double theta, double t,
                 double c) {
    validate(problem);
    require_unit_open(theta, "theta");
    require_unit_closed(t, "t");
    require_unit_closed(c, "c");
    if (c == 0.0) return t;
    const UpperView v(problem);
    const BinomialModel th = v.at(theta);
    return t * (1.0 - pt_rand_cdf_upper(v, th, c)) +
           pt_rand_cdf_upper(v, th, t * c);
}

double cdf(PValueKind kind, const OneSidedProblem& problem, double theta,
           double t, double c) {
    switch (kind) {
        case PValueKind::lfc:
            return p_lfc_cdf(problem, theta, t);
        case PValueKind::rand1:
            return rand1_cdf(problem, theta, t, c);
        case PValueKind::pt:
            return pt_rand_cdf(problem, theta, t);
        case PValueKind::rand2:
            return rand2_cdf(problem, theta, t, c);
    }
    throw std::invalid_argument("cdf: unknown p-value kind");
}

ValidityReport check_validity(PValueKind kind, const OneSidedProblem& problem,
                              double c, const std::vector<double>& theta_grid,
                              const std::vector<double>& t_grid) {
    ValidityReport report;
    report.max_violation = -std::numeric_limits<double>::infinity();
    for (const double theta : theta_grid) {
        for (const double t : t_grid) {
            const double v = cdf(kind, problem, theta, t, c) - t;
            if (v > report.max_violation) {
                report.max_violation = v;
                report.worst_theta = theta;
                report.worst_t = t;
            }
        }
    }
    report.pass = report.max_violation <= kValidityTol;
    return report;
}

UniformValidityReport check_uniform_validity(
    const OneSidedProblem& problem, double theta,
    const std::vector<double>& tau_grid, const std::vector<double>& t_grid) {
    UniformValidityReport report;
    for (const double tau : tau_grid) {
        if (!(tau > 0.0)) continue;
        const double p_tau = p_lfc_cdf(problem, theta, tau);
        if (p_tau <= 0.0) continue;
        for (const double t : t_grid) {
            if (t > tau) continue;
            const double excess = p_lfc_cdf(problem, theta, t) / p_tau - t / tau;
            report.max_ratio_excess = std::max(report.max_ratio_excess, excess);
        }
    }
    double prev_h = 0.0;
    bool have_prev = false;
    for (const double t : t_grid) {
        const double denom = pt_rand_cdf(problem, problem.theta_star, t);
        if (denom <= 0.0) continue;
        const double h = pt_rand_cdf(problem, theta, t) / denom;
        if (have_prev)
            report.max_h_decrease = std::max(report.max_h_decrease, prev_h - h);
        prev_h = h;
        have_prev = true;
    }
    report.pass = report.max_ratio_excess <= kValidityTol &&
                  report.max_h_decrease <= kValidityTol;
    return report;
}

}  // namespace randpv
