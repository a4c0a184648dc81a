#include "randpv/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace randpv {
namespace {

double log_pmf(int n, double theta, int k) {
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0) + double(k) * std::log(theta) +
           double(n - k) * std::log1p(-theta);
}

// Sum of pmf terms over {from..to}, anchored at the largest term and walked
// toward the smaller ones so the recurrence only ever shrinks. Terms whose
// remaining contribution cannot move the sum are dropped.
long double tail_sum(int n, double theta, int from, int to, int anchor) {
    const long double head = std::exp((long double)log_pmf(n, theta, anchor));
    long double sum = head;
    const long double odds = (long double)theta / (1.0L - (long double)theta);
    // walk down from the anchor
    long double term = head;
    for (int j = anchor; j > from; --j) {
        term *= (long double)j / (long double)(n - j + 1) / odds;
        sum += term;
        if (term * (j - from) < sum * 1e-22L) break;
    }
    // walk up from the anchor
    term = head;
    for (int j = anchor; j < to; ++j) {
        term *= (long double)(n - j) / (long double)(j + 1) * odds;
        sum += term;
        if (term * (to - j) < sum * 1e-22L) break;
    }
    return sum;
}

}  // namespace

void validate(const BinomialModel& model) {
    if (model.n < 1) throw std::domain_error("BinomialModel: n must be >= 1");
    if (!(model.theta >= 0.0 && model.theta <= 1.0))
        throw std::domain_error("BinomialModel: theta must lie in [0,1]");
}

double pmf(const BinomialModel& model, int k) {
    validate(model);
    if (k < 0 || k > model.n) return 0.0;
    if (model.theta == 0.0) return k == 0 ? 1.0 : 0.0;
    if (model.theta == 1.0) return k == model.n ? 1.0 : 0.0;
    return std::exp(log_pmf(model.n, model.theta, k));
}

double log_pmf(const BinomialModel& model, int k) {
    validate(model);
    const double inf = std::numeric_limits<double>::infinity();
    if (k < 0 || k > model.n) return -inf;
    if (model.theta == 0.0) return k == 0 ? 0.0 : -inf;
    if (model.theta == 1.0) return k == model.n ? 0.0 : -inf;
    return log_pmf(model.n, model.theta, k);
}

double cdf(const BinomialModel& model, int k) {
    validate(model);
    const int n = model.n;
    const double theta = model.theta;
    if (k < 0) return 0.0;
    if (k >= n) return 1.0;
    if (theta == 0.0) return 1.0;
    if (theta == 1.0) return 0.0;
    if (double(k) < double(n) * theta) {
        // lower tail is the smaller one; its largest term sits at j = k
        const long double s = tail_sum(n, theta, 0, k, k);
        return std::clamp((double)s, 0.0, 1.0);
    }
    // sum P(T > k); largest term at j = k + 1
    const long double s = tail_sum(n, theta, k + 1, n, k + 1);
    return std::clamp((double)(1.0L - s), 0.0, 1.0);
}

double cdf_left(const BinomialModel& model, int k) { return cdf(model, k - 1); }

double pmf(const BinomialModel& model, double x) {
    return pmf(model, (int)std::floor(x));
}
double cdf(const BinomialModel& model, double x) {
    if (x >= double(model.n)) return cdf(model, model.n);
    if (x < 0.0) return cdf(model, -1);
    return cdf(model, (int)std::floor(x));
}
double cdf_left(const BinomialModel& model, double x) {
    if (x <= 0.0) return 0.0;
    if (x > double(model.n)) return 1.0;
    const double f = std::floor(x);
    // P(T < x) drops to cdf(x-1) only when x sits exactly on an atom
    return x == f ? cdf(model, (int)f - 1) : cdf(model, (int)f);
}

int quantile(const BinomialModel& model, double y) {
    validate(model);
    if (!(y >= 0.0 && y <= 1.0))
        throw std::domain_error("quantile: y must lie in [0,1]");
    if (y <= 0.0) return 0;
    int lo = 0, hi = model.n;  // cdf(n) = 1 >= y always
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (cdf(model, mid) >= y)
            hi = mid;
        else
            lo = mid + 1;
    }
    // guard against ulp-level non-monotonicity across the tail switch
    while (lo > 0 && cdf(model, lo - 1) >= y) --lo;
    while (lo < model.n && cdf(model, lo) < y) ++lo;
    return lo;
}

int left_quantile(const BinomialModel& model, double y) {
    validate(model);
    if (!(y >= 0.0 && y <= 1.0))
        throw std::domain_error("left_quantile: y must lie in [0,1]");
    int lo = 0, hi = model.n;  // cdf_left(0) = 0 <= y always
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        if (cdf_left(model, mid) <= y)
            lo = mid;
        else
            hi = mid - 1;
    }
    while (lo < model.n && cdf_left(model, lo + 1) <= y) ++lo;
    while (lo > 0 && cdf_left(model, lo) > y) --lo;
    return lo;
}

}  // namespace randpv
