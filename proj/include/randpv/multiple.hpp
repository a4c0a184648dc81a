// Multiple-testing harness: marginal p-values across k independent binomial
// strata, the Schweder-Spjotvoll estimator of the number of true nulls,
// Bonferroni / Sidak adjustments with optional plug-in, and Monte Carlo
// studies of the FWER and of the k0 estimator.
//
// Determinism contract: every study is a pure function of (seed, problem).
// Uniform draws come from substreams keyed by (repetition, stratum, role),
// so results do not depend on how repetitions are scheduled across threads.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "randpv/pvalues.hpp"

namespace randpv {

struct Stratum {
    int n = 1;                     // items in the category
    std::optional<double> theta;   // true positive rate, needed for simulation
    double theta_star = 0.5;       // null boundary for this stratum
    std::optional<int> count;      // observed positives, when data are fixed
};

struct MultipleProblem {
    std::vector<Stratum> strata;
    double c = 0.5;       // shared randomization constant
    double lambda = 0.5;  // ecdf evaluation point of the k0 estimator
    double alpha = 0.05;  // family-wise level
};

void validate(const MultipleProblem& problem);

// One draw of all stratum counts, r_i ~ Bin(n_i, theta_i), keyed by
// (seed, rep, stratum, data role).
std::vector<int> simulate_counts(const MultipleProblem& problem,
                                 std::uint64_t seed, std::uint64_t rep = 0);

// Marginal p-values of the chosen kind, one per stratum, with independent
// U / U-tilde substreams per stratum and the problem's shared c.
std::vector<double> marginal_pvalues(PValueKind kind,
                                     const MultipleProblem& problem,
                                     const std::vector<int>& counts,
                                     std::uint64_t seed, std::uint64_t rep = 0);

// k * (1 - ecdf(lambda)) / (1 - lambda); deliberately not capped at k.
double schweder_k0(const std::vector<double>& pvalues, double lambda);

double bonferroni_level(double k_eff, double alpha);
double sidak_level(double k_eff, double alpha);

enum class AdjustMethod { bonferroni, sidak };

struct TestOutcome {
    std::vector<double> pvalues;
    std::vector<bool> rejections;
    double k0_hat = 0.0;
    double adjusted_level = 0.0;
};

// Estimates k0, floors it at 1, adjusts the level with the chosen method and
// rejects every p-value at or below it.
TestOutcome plug_in_test(const std::vector<double>& pvalues, double alpha,
                         double lambda, AdjustMethod method);

struct FwerEstimate {
    double fwer = 0.0;
    double std_error = 0.0;
    int reps = 0;
};

// Simulates data, applies the multiple test, and counts repetitions with at
// least one false rejection among the true nulls.
FwerEstimate fwer_mc(const MultipleProblem& problem, PValueKind kind,
                     AdjustMethod method, bool use_plug_in, int reps,
                     std::uint64_t seed);

struct K0Row {
    PValueKind kind;
    double mean_k0_hat = 0.0;
};

struct K0Study {
    double theta_star = 0.0;
    int k0_true = 0;
    int reps = 0;
    std::uint64_t seed = 0;
    std::vector<K0Row> rows;
};

// Monte Carlo average of the k0 estimator per p-value kind, with the data
// held fixed at the observed counts (falling back to round(theta * n) when a
// stratum has no count) and only the randomization redrawn per repetition.
// The non-randomized lfc estimate is computed once. theta_star_common
// replaces every stratum boundary.
K0Study k0_study(const MultipleProblem& problem, double theta_star_common,
                 const std::vector<PValueKind>& kinds, int reps,
                 std::uint64_t seed);

// CSV rows "theta_star,k0_true,kind,mean_k0_hat,reps,seed", plus a JSON form.
std::string k0_study_csv(const std::vector<K0Study>& studies);
std::string k0_study_json(const std::vector<K0Study>& studies);

}  // namespace randpv
