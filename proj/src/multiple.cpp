#include "randpv/multiple.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include <json.hpp>

#include "randpv/power.hpp"
#include "randpv/rng.hpp"
#include "randpv/series.hpp"

namespace randpv {
namespace {

// Runs body(rep) for rep in [0, reps) across hardware threads. Each call is
// independent; results must be written to preallocated per-rep slots so the
// outcome is identical to a sequential run.
template <typename Body>
void parallel_reps(int reps, Body&& body) {
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers =
        std::min<unsigned>(hw == 0 ? 1 : hw, (unsigned)std::max(reps, 1));
    if (workers <= 1 || reps < 64) {
        for (int r = 0; r < reps; ++r) body(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<int> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int r = next.fetch_add(1); r < reps; r = next.fetch_add(1))
                body(r);
        });
    }
    for (auto& t : pool) t.join();
}

int fixed_count(const Stratum& st, std::size_t i) {
    if (st.count) {
        if (*st.count < 0 || *st.count > st.n)
            throw std::invalid_argument("stratum " + std::to_string(i) +
                                        ": count outside {0..n}");
        return *st.count;
    }
    if (!st.theta)
        throw std::invalid_argument("stratum " + std::to_string(i) +
                                    ": neither count nor theta is set");
    return (int)std::lround(*st.theta * (double)st.n);
}

}  // namespace

void validate(const MultipleProblem& problem) {
    if (problem.strata.empty())
        throw std::domain_error("MultipleProblem: needs at least one stratum");
    if (!(problem.lambda >= 0.0 && problem.lambda < 1.0))
        throw std::domain_error("MultipleProblem: lambda must lie in [0,1)");
    if (!(problem.alpha > 0.0 && problem.alpha < 1.0))
        throw std::domain_error("MultipleProblem: alpha must lie in (0,1)");
    if (!(problem.c >= 0.0 && problem.c <= 1.0))
        throw std::domain_error("MultipleProblem: c must lie in [0,1]");
    for (std::size_t i = 0; i < problem.strata.size(); ++i) {
        const Stratum& st = problem.strata[i];
        if (st.n < 1)
            throw std::domain_error("stratum " + std::to_string(i) +
                                    ": n must be >= 1");
        if (st.theta && !(*st.theta >= 0.0 && *st.theta <= 1.0))
            throw std::domain_error("stratum " + std::to_string(i) +
                                    ": theta must lie in [0,1]");
        if (st.count && (*st.count < 0 || *st.count > st.n))
            throw std::domain_error("stratum " + std::to_string(i) +
                                    ": count outside {0..n}");
    }
}

std::vector<int> simulate_counts(const MultipleProblem& problem,
                                 std::uint64_t seed, std::uint64_t rep) {
    validate(problem);
    std::vector<int> counts(problem.strata.size());
    for (std::size_t i = 0; i < problem.strata.size(); ++i) {
        const Stratum& st = problem.strata[i];
        if (!st.theta)
            throw std::invalid_argument("simulate_counts: stratum " +
                                        std::to_string(i) + " has no theta");
        const double u = uniform({seed, rep, i, Role::data});
        counts[i] = quantile(BinomialModel{st.n, *st.theta}, u);
    }
    return counts;
}

std::vector<double> marginal_pvalues(PValueKind kind,
                                     const MultipleProblem& problem,
                                     const std::vector<int>& counts,
                                     std::uint64_t seed, std::uint64_t rep) {
    validate(problem);
    if (counts.size() != problem.strata.size())
        throw std::invalid_argument(
            "marginal_pvalues: counts and strata differ in length");
    std::vector<double> pvals(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const Stratum& st = problem.strata[i];
        const OneSidedProblem sub{st.n, st.theta_star, Tail::upper};
        RandomizationInput rin;
        rin.u = uniform({seed, rep, i, Role::u});
        rin.u_tilde = uniform({seed, rep, i, Role::u_tilde});
        rin.c = problem.c;
        switch (kind) {
            case PValueKind::lfc:
                pvals[i] = p_lfc(sub, counts[i]);
                break;
            case PValueKind::rand1:
                pvals[i] = rand1(sub, counts[i], rin);
                break;
            case PValueKind::pt:
                pvals[i] = pt_rand(sub, counts[i], rin);
                break;
            case PValueKind::rand2:
                pvals[i] = rand2(sub, counts[i], rin);
                break;
        }
    }
    return pvals;
}

double schweder_k0(const std::vector<double>& pvalues, double lambda) {
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw std::domain_error("schweder_k0: lambda must lie in [0,1)");
    if (pvalues.empty())
        throw std::invalid_argument("schweder_k0: empty p-value vector");
    const double k = (double)pvalues.size();
    std::size_t at_most = 0;
    for (const double p : pvalues) at_most += (p <= lambda);
    const double ecdf = (double)at_most / k;
    return k * (1.0 - ecdf) / (1.0 - lambda);
}

double bonferroni_level(double k_eff, double alpha) {
    if (!(k_eff >= 1.0))
        throw std::domain_error("bonferroni_level: k_eff must be >= 1");
    return alpha / k_eff;
}

double sidak_level(double k_eff, double alpha) {
    if (!(k_eff >= 1.0))
        throw std::domain_error("sidak_level: k_eff must be >= 1");
    return -std::expm1(std::log1p(-alpha) / k_eff);
}

TestOutcome plug_in_test(const std::vector<double>& pvalues, double alpha,
                         double lambda, AdjustMethod method) {
    TestOutcome out;
    out.pvalues = pvalues;
    out.k0_hat = schweder_k0(pvalues, lambda);
    const double k_eff = std::max(1.0, out.k0_hat);
    out.adjusted_level = method == AdjustMethod::bonferroni
                             ? bonferroni_level(k_eff, alpha)
                             : sidak_level(k_eff, alpha);
    out.rejections.resize(pvalues.size());
    for (std::size_t i = 0; i < pvalues.size(); ++i)
        out.rejections[i] = pvalues[i] <= out.adjusted_level;
    return out;
}

FwerEstimate fwer_mc(const MultipleProblem& problem, PValueKind kind,
                     AdjustMethod method, bool use_plug_in, int reps,
                     std::uint64_t seed) {
    validate(problem);
    if (reps < 1) throw std::invalid_argument("fwer_mc: reps must be >= 1");
    const std::size_t k = problem.strata.size();
    std::vector<bool> is_null(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Stratum& st = problem.strata[i];
        if (!st.theta)
            throw std::invalid_argument("fwer_mc: stratum " + std::to_string(i) +
                                        " has no theta");
        is_null[i] = *st.theta <= st.theta_star;
    }
    const double fixed_level =
        method == AdjustMethod::bonferroni
            ? bonferroni_level((double)k, problem.alpha)
            : sidak_level((double)k, problem.alpha);

    std::vector<char> any_false_rejection(reps, 0);
    parallel_reps(reps, [&](int rep) {
        const auto counts = simulate_counts(problem, seed, (std::uint64_t)rep);
        const auto pvals =
            marginal_pvalues(kind, problem, counts, seed, (std::uint64_t)rep);
        double level = fixed_level;
        if (use_plug_in) {
            const double k0_hat = schweder_k0(pvals, problem.lambda);
            const double k_eff = std::max(1.0, k0_hat);
            level = method == AdjustMethod::bonferroni
                        ? bonferroni_level(k_eff, problem.alpha)
                        : sidak_level(k_eff, problem.alpha);
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (is_null[i] && pvals[i] <= level) {
                any_false_rejection[rep] = 1;
                break;
            }
        }
    });

    FwerEstimate est;
    est.reps = reps;
    long long hits = 0;
    for (const char hit : any_false_rejection) hits += hit;
    est.fwer = (double)hits / (double)reps;
    est.std_error = std::sqrt(est.fwer * (1.0 - est.fwer) / (double)reps);
    return est;
}

K0Study k0_study(const MultipleProblem& problem, double theta_star_common,
                 const std::vector<PValueKind>& kinds, int reps,
                 std::uint64_t seed) {
    validate(problem);
    if (reps < 1) throw std::invalid_argument("k0_study: reps must be >= 1");
    if (!(theta_star_common > 0.0 && theta_star_common < 1.0))
        throw std::domain_error("k0_study: theta_star must lie in (0,1)");

    MultipleProblem fixed = problem;
    std::vector<int> counts(fixed.strata.size());
    int k0_true = 0;
    for (std::size_t i = 0; i < fixed.strata.size(); ++i) {
        Stratum& st = fixed.strata[i];
        st.theta_star = theta_star_common;
        counts[i] = fixed_count(st, i);
        if (!st.theta)
            throw std::invalid_argument("k0_study: stratum " + std::to_string(i) +
                                        " has no theta");
        if (*st.theta <= theta_star_common) ++k0_true;
    }

    K0Study study;
    study.theta_star = theta_star_common;
    study.k0_true = k0_true;
    study.reps = reps;
    study.seed = seed;

    for (const PValueKind kind : kinds) {
        K0Row row{kind, 0.0};
        if (kind == PValueKind::lfc) {
            // deterministic given the data: a single evaluation suffices
            const auto pvals = marginal_pvalues(kind, fixed, counts, seed, 0);
            row.mean_k0_hat = schweder_k0(pvals, fixed.lambda);
        } else {
            std::vector<double> per_rep(reps);
            parallel_reps(reps, [&](int rep) {
                const auto pvals = marginal_pvalues(kind, fixed, counts, seed,
                                                    (std::uint64_t)rep);
                per_rep[rep] = schweder_k0(pvals, fixed.lambda);
            });
            double sum = 0.0;
            for (const double v : per_rep) sum += v;  // fixed order
            row.mean_k0_hat = sum / (double)reps;
        }
        study.rows.push_back(row);
    }
    return study;
}

std::string k0_study_csv(const std::vector<K0Study>& studies) {
    std::string out = "theta_star,k0_true,kind,mean_k0_hat,reps,seed\n";
    for (const K0Study& study : studies) {
        for (const K0Row& row : study.rows) {
            out += format_double(study.theta_star);
            out += ',';
            out += std::to_string(study.k0_true);
            out += ',';
            out += kind_name(row.kind);
            out += ',';
            out += format_double(row.mean_k0_hat);
            out += ',';
            out += std::to_string(study.reps);
            out += ',';
            out += std::to_string(study.seed);
            out += '\n';
        }
    }
    return out;
}

std::string k0_study_json(const std::vector<K0Study>& studies) {
    nlohmann::json root = nlohmann::json::array();
    for (const K0Study& study : studies) {
        nlohmann::json entry;
        entry["theta_star"] = study.theta_star;
        entry["k0_true"] = study.k0_true;
        entry["reps"] = study.reps;
        entry["seed"] = study.seed;
        nlohmann::json rows = nlohmann::json::array();
        for (const K0Row& row : study.rows)
            rows.push_back({{"kind", kind_name(row.kind)},
                            {"mean_k0_hat", row.mean_k0_hat}});
        entry["estimates"] = std::move(rows);
        root.push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

}  // namespace randpv
