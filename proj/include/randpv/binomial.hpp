// Exact numerics for the binomial family Bin(n, theta): pmf, right-continuous
// CDF, left limits, and both generalized inverses.
//
// Conventions:
//   cdf(k)       = P(T <= k), right-continuous, 0 below the support, 1 above.
//   cdf_left(k)  = P(T < k)  = cdf(k - 1).
//   quantile(y)      = smallest k in {0..n} with cdf(k) >= y; quantile(0) = 0.
//   left_quantile(y) = largest  k in {0..n} with cdf_left(k) <= y.
//
// The pmf is evaluated in log space (lgamma), so n up to at least 10^4 is
// safe. CDFs are accumulated from the nearer tail with a term recurrence
// anchored at the largest term, which avoids catastrophic cancellation.
// pmf/cdf/cdf_left also accept real-valued arguments by flooring; nothing in
// this project needs that, but the extension is harmless and documented here.

#pragma once

namespace randpv {

struct BinomialModel {
    int n = 1;          // number of trials, >= 1
    double theta = 0.5; // success probability in [0, 1]
};

// Throws std::domain_error if n < 1 or theta is outside [0,1] (or NaN).
void validate(const BinomialModel& model);

double pmf(const BinomialModel& model, int k);
double cdf(const BinomialModel& model, int k);
double cdf_left(const BinomialModel& model, int k);

// log P(T = k); -inf outside the support.
double log_pmf(const BinomialModel& model, int k);

// Real-argument variants; x is floored.
double pmf(const BinomialModel& model, double x);
double cdf(const BinomialModel& model, double x);
double cdf_left(const BinomialModel& model, double x);

// y must lie in [0,1]; throws std::domain_error otherwise.
int quantile(const BinomialModel& model, double y);
int left_quantile(const BinomialModel& model, double y);

}  // namespace randpv
