#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "crl/poly.hpp"

namespace crl {

struct CampaignConfig {
    int d = 1;
    int n = 1;
    int ell = 2;
    long long trials = 0;
    std::uint64_t master_seed = 0;
    enum class Mode { MonteCarlo, Exhaustive } mode = Mode::MonteCarlo;
    int prime_budget = 2;
    double tol = 1e-8;
    bool use_filter = true;

    void validate() const;  // throws std::invalid_argument
};

struct WilsonCI {
    double lo = 0;
    double hi = 1;
};

// 95% score interval by default.
WilsonCI wilson_interval(long long hits, long long trials,
                         double z = 1.959963984540054);

struct EstimateReport {
    CampaignConfig config;
    long long hits = 0;
    long long misses = 0;
    long long undecided = 0;

    double p_hat = 0;             // pessimistic (undecided counted as hits)
    double p_hat_optimistic = 0;  // undecided counted as misses
    std::string p_hat_rational;   // "(hits+undecided)/trials"
    WilsonCI ci;                  // on the pessimistic estimate
    double scaled_n = 0;          // p_hat * n
    double scaled_n32 = 0;        // p_hat * n^(3/2)

    // d=1 per-class hit counts (a hit may carry several factor classes)
    long long hits_at_plus1 = 0;
    long long hits_at_minus1 = 0;
    long long hits_low_degree = 0;
    long long hits_higher = 0;

    // pipeline stage counters (d=1)
    long long stage_filter_accept = 0;
    long long stage_mod31_reject = 0;
    long long stage_mod62_reject = 0;
    long long stage_exact = 0;

    double seconds = 0;  // wall time; serialized only when timing is requested

    std::string to_json(bool include_timing = false) const;
};

// Monte Carlo estimate of p(n, d, ell). Supported: (d=1, ell=2) exact
// per-trial decisions, and (d=2, ell=3) with Undecided as a first-class
// outcome. Deterministic given (master_seed, trial index).
EstimateReport estimate_p(const CampaignConfig& config);

struct ExhaustiveResult {
    int n = 0;
    mpz_class pair_count;       // 2^(2(n+1)) ordered pairs
    mpz_class hit_count;
    mpq_class p_exact;
    mpz_class both_at_plus1;    // pairs with P1(1) = P2(1) = 0
    mpz_class both_at_minus1;
    mpz_class all_four;         // pairs vanishing at both +1 and -1

    std::string to_json() const;
};

// Exhaustive ground truth over all coefficient pairs (d=1, ell=2, n <= 10).
ExhaustiveResult exact_p_bruteforce(const CampaignConfig& config);

// CSV rows "n,p_hat,ci_lo,ci_hi,scaled,undecided_frac,seconds" for d=1
// campaigns; `seconds` stays 0 unless timing is requested so reruns are
// byte-identical.
std::string asymptotic_table(const std::vector<int>& n_list, long long trials,
                             std::uint64_t seed, bool timing = false);

// Littlewood-Offord bound maxima over the shipped vector corpus.
std::string bound_suite_json();

int worker_count();  // CRL_THREADS cap, >= 1

}  // namespace crl
