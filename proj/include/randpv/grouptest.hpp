// Group testing with misclassification: a pool of s individuals tests
// positive with probability pi = Se + (1 - Se - Sp) (1 - theta)^s, so a test
// about the individual prevalence theta translates into a binomial test
// about pi across g pools. Group size s may be real-valued (it only enters
// through the exponent); the pool count g is always an integer.

#pragma once

#include <vector>

#include "randpv/pvalues.hpp"
#include "randpv/series.hpp"

namespace randpv {

struct GroupDesign {
    int g = 1;         // number of groups / inspections
    double s = 1.0;    // group size, >= 1
    double se = 1.0;   // group sensitivity
    double sp = 1.0;   // group specificity
};

// Requires g >= 1, s >= 1 and se + sp > 1 (an informative test, which makes
// pi strictly increasing in theta).
void validate(const GroupDesign& design);

double pi_from_theta(double theta, const GroupDesign& design);

// Inverts pi_from_theta; estimates outside the attainable pi range clamp to
// the [0,1] theta scale instead of erroring.
double theta_mle(double pi_hat, const GroupDesign& design);

// H: theta <= theta* becomes H: pi <= pi* over Bin(g, pi).
OneSidedProblem translate_problem(double theta_star, const GroupDesign& design);

// Power against group size for a fixed number of inspections base.g; base
// supplies g, se and sp while s runs over s_range. A point whose translation
// degenerates is reported as NaN rather than aborting the sweep.
CurveSeries power_fixed_inspections(PValueKind kind, double theta_star,
                                    double theta_alt, double alpha, double c,
                                    const GroupDesign& base,
                                    const std::vector<double>& s_range);

// Power when the total number of individuals is fixed: each pool count g in
// g_sequence uses group size s = n_total / g, non-integer values included.
CurveSeries power_fixed_individuals(PValueKind kind, double theta_star,
                                    double theta_alt, double alpha, double c,
                                    int n_total,
                                    const std::vector<int>& g_sequence,
                                    double se, double sp);

}  // namespace randpv
