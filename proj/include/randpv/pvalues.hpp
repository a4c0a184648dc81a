// The four p-value constructions for one-sided binomial testing and their
// analytic CDFs, plus validity / uniform-validity checkers.
//
//   p_lfc      non-randomized p-value computed at the boundary of H
//   rand1      single-stage randomization of p_lfc, scaled by the largest
//              support point c* at or below the chosen constant c
//   pt_rand    randomized p-value that is exactly uniform at the boundary
//              (thresholding it reproduces the randomized UMP test)
//   rand2      two-stage randomization built on pt_rand
//
// All CDFs are exact (no Monte Carlo) and, for p_lfc and rand1, follow the
// true step distribution: between support points the CDF is flat. Randomness
// never originates here; U and U-tilde are supplied by the caller.
//
// Lower-tailed problems are handled by reflecting the statistic (k -> n - k,
// theta -> 1 - theta), which maps them onto the upper-tailed formulas.

#pragma once

#include <optional>
#include <vector>

#include "randpv/binomial.hpp"

namespace randpv {

enum class Tail { upper, lower };

struct OneSidedProblem {
    int n = 1;                 // sample size (or group count)
    double theta_star = 0.5;   // boundary of H, strictly inside (0,1)
    Tail tail = Tail::upper;
};

enum class PValueKind { lfc, rand1, pt, rand2 };

struct RandomizationInput {
    double u = 0.5;                    // U draw, strictly inside (0,1)
    std::optional<double> u_tilde;     // U-tilde draw, required by rand2
    double c = 0.5;                    // randomization constant in [0,1]
};

struct SupportPoint {
    double p_value;   // a value attained by p_lfc
    double mass;      // its probability under theta*
    double cum_prob;  // running mass; equals p_value at the boundary
};

struct SupportTable {
    std::vector<SupportPoint> points;  // ascending in p_value
};

// Shared tolerance for the validity checks: an analytic CDF may exceed the
// diagonal by at most this much before the check fails.
inline constexpr double kValidityTol = 1e-10;

void validate(const OneSidedProblem& problem);

double p_lfc(const OneSidedProblem& problem, int t_obs);
double p_lfc_cdf(const OneSidedProblem& problem, double theta, double t);
SupportTable lfc_support(const OneSidedProblem& problem);
double c_star(const OneSidedProblem& problem, double c);

double rand1(const OneSidedProblem& problem, int t_obs,
             const RandomizationInput& rin);
double rand1_cdf(const OneSidedProblem& problem, double theta, double t,
                 double c);

double pt_rand(const OneSidedProblem& problem, int t_obs,
               const RandomizationInput& rin);
double pt_rand_cdf(const OneSidedProblem& problem, double theta, double t);

double rand2(const OneSidedProblem& problem, int t_obs,
             const RandomizationInput& rin);
double rand2_cdf(const OneSidedProblem& problem, double theta, double t,
                 double c);

// Dispatch over the four analytic CDFs; c is ignored by lfc and pt.
double cdf(PValueKind kind, const OneSidedProblem& problem, double theta,
           double t, double c);

struct ValidityReport {
    double max_violation = 0.0;  // max over the grid of CDF(t) - t
    double worst_theta = 0.0;
    double worst_t = 0.0;
    bool pass = true;            // max_violation <= kValidityTol
};

// Evaluates CDF(t) - t over theta_grid x t_grid for null parameters.
ValidityReport check_validity(PValueKind kind, const OneSidedProblem& problem,
                              double c, const std::vector<double>& theta_grid,
                              const std::vector<double>& t_grid);

struct UniformValidityReport {
    double max_ratio_excess = 0.0;  // max of P(p<=t)/P(p<=tau) - t/tau
    double max_h_decrease = 0.0;    // max adjacent drop of h(t)
    bool pass = true;
};

// Checks the conditional-validity ratio for p_lfc on all pairs t <= tau with
// P_theta(p <= tau) > 0, and that h(t) = P_theta(PT <= t) / P_theta*(PT <= t)
// is nondecreasing along t_grid. The ratio condition is only guaranteed when
// tau is an attained CDF value (a support point of p_lfc); callers choose the
// tau grid accordingly.
UniformValidityReport check_uniform_validity(const OneSidedProblem& problem,
                                             double theta,
                                             const std::vector<double>& tau_grid,
                                             const std::vector<double>& t_grid);

}  // namespace randpv
