#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "crl/atom.hpp"
#include "crl/experiment.hpp"

using namespace crl;
using json = nlohmann::json;

namespace {

CampaignConfig mc(int d, int n, int ell, long long trials, std::uint64_t seed) {
    CampaignConfig c;
    c.d = d;
    c.n = n;
    c.ell = ell;
    c.trials = trials;
    c.master_seed = seed;
    return c;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(estimate_p(mc(3, 4, 4, 100, 1)), std::invalid_argument);
    CHECK_THROWS_AS(estimate_p(mc(1, 4, 3, 100, 1)), std::invalid_argument);
    CHECK_THROWS_AS(estimate_p(mc(2, 4, 2, 100, 1)), std::invalid_argument);
    CHECK_THROWS_AS(estimate_p(mc(1, 4, 2, 0, 1)), std::invalid_argument);
    CampaignConfig ex = mc(1, 11, 2, 1, 1);
    ex.mode = CampaignConfig::Mode::Exhaustive;
    CHECK_THROWS_AS(exact_p_bruteforce(ex), std::invalid_argument);
}

TEST_CASE("wilson interval properties") {
    const auto ci = wilson_interval(5, 100);
    CHECK(ci.lo > 0.0);
    CHECK(ci.lo < 0.05);
    CHECK(ci.hi > 0.05);
    CHECK(ci.hi < 0.15);
    // symmetry: lo(h, t) = 1 - hi(t - h, t)
    const auto mirror = wilson_interval(95, 100);
    CHECK(ci.lo == doctest::Approx(1.0 - mirror.hi).epsilon(1e-12));
    CHECK(wilson_interval(0, 10).lo == doctest::Approx(0.0));
    CHECK(wilson_interval(10, 10).hi == doctest::Approx(1.0));
}

TEST_CASE("estimate determinism and tally consistency") {
    const auto cfg = mc(1, 15, 2, 3000, 42);
    const auto a = estimate_p(cfg);
    const auto b = estimate_p(cfg);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.hits + a.misses + a.undecided == cfg.trials);
    CHECK(a.undecided == 0);  // d=1 decisions are exact
    CHECK(a.ci.lo <= a.p_hat);
    CHECK(a.p_hat <= a.ci.hi);
    CHECK(a.scaled_n == doctest::Approx(a.p_hat * 15));
}

TEST_CASE("pre-filter changes cost, never decisions") {
    auto cfg = mc(1, 19, 2, 10000, 7);  // odd n: the ±1 events are feasible
    const auto with = estimate_p(cfg);
    cfg.use_filter = false;
    const auto without = estimate_p(cfg);
    CHECK(with.hits == without.hits);
    CHECK(with.stage_filter_accept > 0);
    CHECK(without.stage_filter_accept == 0);
}

TEST_CASE("worker pool size does not change the report") {
    const auto cfg = mc(1, 15, 2, 4000, 9);
    const auto base = estimate_p(cfg).to_json();
    setenv("CRL_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    CHECK(estimate_p(cfg).to_json() == base);
    setenv("CRL_THREADS", "1", 1);
    CHECK(estimate_p(cfg).to_json() == base);
    unsetenv("CRL_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("exhaustive n = 1 ground truth") {
    CampaignConfig cfg = mc(1, 1, 2, 1, 0);
    cfg.mode = CampaignConfig::Mode::Exhaustive;
    const auto r = exact_p_bruteforce(cfg);
    CHECK(r.pair_count == 16);
    CHECK(r.hit_count == 8);
    CHECK(r.p_exact == mpq_class(1, 2));
}

TEST_CASE("exhaustive tallies match the walk-return identity") {
    for (int n : {1, 3, 5}) {
        CampaignConfig cfg = mc(1, n, 2, 1, 0);
        cfg.mode = CampaignConfig::Mode::Exhaustive;
        const auto r = exact_p_bruteforce(cfg);
        const mpq_class w = walk_return_prob(n + 1);
        mpq_class plus(r.both_at_plus1, r.pair_count), minus(r.both_at_minus1, r.pair_count);
        plus.canonicalize();
        minus.canonicalize();
        CHECK(plus == w * w);
        CHECK(minus == w * w);
    }
}

TEST_CASE("wilson CI covers the exact p in most meta-replications") {
    CampaignConfig ex = mc(1, 5, 2, 1, 0);
    ex.mode = CampaignConfig::Mode::Exhaustive;
    const double p_true = exact_p_bruteforce(ex).p_exact.get_d();
    int covered = 0;
    const int reps = 200;
    for (int rep = 0; rep < reps; ++rep) {
        const auto r = estimate_p(mc(1, 5, 2, 10000, 1000 + rep));
        if (r.ci.lo <= p_true && p_true <= r.ci.hi) ++covered;
    }
    CHECK(covered >= 186);  // >= 93% of 200
}

TEST_CASE("asymptotic table schema and reproducibility") {
    const auto csv = asymptotic_table({7, 9}, 2000, 11);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,p_hat,ci_lo,ci_hi,scaled,undecided_frac,seconds");
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        ++rows;
        CHECK(line.substr(line.rfind(',') + 1) == "0");  // untimed runs serialize 0
    }
    CHECK(rows == 2);
    CHECK(asymptotic_table({7, 9}, 2000, 11) == csv);  // byte-identical rerun
}

TEST_CASE("d=2 estimates report undecided separately") {
    const auto r = estimate_p(mc(2, 3, 3, 300, 5));
    CHECK(r.hits + r.misses + r.undecided == 300);
    CHECK(r.p_hat >= r.p_hat_optimistic);
    const json j = json::parse(r.to_json());
    CHECK(j["undecided"].get<long long>() == r.undecided);
}

TEST_CASE("bound suite summary") {
    const json j = json::parse(bound_suite_json());
    CHECK(j["max_erdos_normalized"].get<double>() <= 1.0 + 1e-12);
    CHECK(j["max_ss_ratio"].get<double>() > 0.0);
    CHECK(j["max_halasz_ratio"].get<double>() <= 4.0);
    CHECK(j["max_erdos_witness"].get<std::string>() == "ones_m2");
    CHECK(j["entries"].size() >= 10);
}

TEST_CASE("reports embed their config") {
    const auto r = estimate_p(mc(1, 9, 2, 500, 77));
    const json j = json::parse(r.to_json());
    CHECK(j["config"]["master_seed"].get<std::uint64_t>() == 77);
    CHECK(j["config"]["n"].get<int>() == 9);
    CHECK_FALSE(j.contains("seconds"));  // timing off by default
    const json jt = json::parse(r.to_json(true));
    CHECK(jt.contains("seconds"));
}
