#include "crl/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "crl/atom.hpp"
#include "crl/classify.hpp"
#include "crl/common_root.hpp"
#include "crl/modular.hpp"

namespace crl {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json config_json(const CampaignConfig& c) {
    nlohmann::json j;
    j["d"] = c.d;
    j["n"] = c.n;
    j["ell"] = c.ell;
    j["trials"] = c.trials;
    j["master_seed"] = c.master_seed;
    j["mode"] = c.mode == CampaignConfig::Mode::MonteCarlo ? "MonteCarlo" : "Exhaustive";
    j["prime_budget"] = c.prime_budget;
    j["tol"] = c.tol;
    j["use_filter"] = c.use_filter;
    return j;
}

}  // namespace

void CampaignConfig::validate() const {
    if (n < 1) throw std::invalid_argument("config: n must be >= 1");
    if (mode == Mode::Exhaustive) {
        if (d != 1 || ell != 2 || n > 10) {
            throw std::invalid_argument(
                "config: exhaustive mode requires d=1, ell=2, n <= 10");
        }
        return;
    }
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (!((d == 1 && ell == 2) || (d == 2 && ell == 3))) {
        throw std::invalid_argument(
            "config: supported campaigns are (d=1, ell=2) and (d=2, ell=3)");
    }
    if (prime_budget < 1) throw std::invalid_argument("config: prime_budget must be >= 1");
}

WilsonCI wilson_interval(long long hits, long long trials, double z) {
    if (trials <= 0) return {0, 1};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

int worker_count() {
    if (const char* env = std::getenv("CRL_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct WorkerTally {
    long long hits = 0, misses = 0, undecided = 0;
    long long at_plus1 = 0, at_minus1 = 0, low_degree = 0, higher = 0;
    long long filter_accept = 0, mod31_reject = 0, mod62_reject = 0, exact = 0;

    void merge(const WorkerTally& o) {
        hits += o.hits;
        misses += o.misses;
        undecided += o.undecided;
        at_plus1 += o.at_plus1;
        at_minus1 += o.at_minus1;
        low_degree += o.low_degree;
        higher += o.higher;
        filter_accept += o.filter_accept;
        mod31_reject += o.mod31_reject;
        mod62_reject += o.mod62_reject;
        exact += o.exact;
    }
};

void run_trial_1d(const CampaignConfig& cfg, long long k, WorkerTally& t) {
    const Seed s1{cfg.master_seed, 2 * static_cast<std::uint64_t>(k)};
    const Seed s2{cfg.master_seed, 2 * static_cast<std::uint64_t>(k) + 1};
    const BernoulliPolyUni p = sample_uni(cfg.n, s1);
    const BernoulliPolyUni q = sample_uni(cfg.n, s2);

    const auto [p1, pm1] = eval_at_pm1(p);
    const auto [q1, qm1] = eval_at_pm1(q);
    const bool at1 = p1 == 0 && q1 == 0;
    const bool atm1 = pm1 == 0 && qm1 == 0;
    DecisionStage stage = DecisionStage::Exact;
    const bool hit = common_root_exists(p, q, cfg.use_filter, cfg.prime_budget, &stage);
    switch (stage) {
        case DecisionStage::FilterAccept: ++t.filter_accept; break;
        case DecisionStage::Mod31Reject: ++t.mod31_reject; break;
        case DecisionStage::Mod62Reject: ++t.mod62_reject; break;
        case DecisionStage::Exact: ++t.exact; break;
        case DecisionStage::Degenerate: break;
    }
    if (!hit) {
        ++t.misses;
        return;
    }
    ++t.hits;
    if (at1) ++t.at_plus1;
    if (atm1) ++t.at_minus1;
    if (!at1 && !atm1) {
        for (const FactorClass& fc : classify_common_roots_1d(p, q)) {
            switch (fc.cls.tag) {
                case RootClass::Tag::RationalPM1:
                    (fc.cls.which > 0 ? t.at_plus1 : t.at_minus1) += 1;
                    break;
                case RootClass::Tag::LowDegree: ++t.low_degree; break;
                case RootClass::Tag::Higher: ++t.higher; break;
            }
        }
    }
}

void run_trial_2d(const CampaignConfig& cfg, long long k, WorkerTally& t) {
    const std::uint64_t base = 3 * static_cast<std::uint64_t>(k);
    const auto p1 = sample_multi(2, cfg.n, {cfg.master_seed, base});
    const auto p2 = sample_multi(2, cfg.n, {cfg.master_seed, base + 1});
    const auto p3 = sample_multi(2, cfg.n, {cfg.master_seed, base + 2});
    const auto res = common_root_exists_2d(p1, p2, p3, cfg.tol, cfg.prime_budget);
    switch (res.verdict) {
        case Verdict2d::Yes: ++t.hits; break;
        case Verdict2d::No: ++t.misses; break;
        case Verdict2d::Undecided: ++t.undecided; break;
    }
}

}  // namespace

EstimateReport estimate_p(const CampaignConfig& config) {
    config.validate();
    if (config.mode != CampaignConfig::Mode::MonteCarlo) {
        throw std::invalid_argument("estimate_p: MonteCarlo mode required");
    }
    const auto t0 = std::chrono::steady_clock::now();

    const int workers =
        static_cast<int>(std::min<long long>(worker_count(), config.trials));
    std::vector<WorkerTally> tallies(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const long long chunk = (config.trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long long lo = w * chunk;
        const long long hi = std::min(config.trials, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            WorkerTally& t = tallies[static_cast<std::size_t>(w)];
            for (long long k = lo; k < hi; ++k) {
                if (config.d == 1) run_trial_1d(config, k, t);
                else run_trial_2d(config, k, t);
            }
        });
    }
    for (auto& th : pool) th.join();
    WorkerTally total;
    for (const auto& t : tallies) total.merge(t);  // fixed merge order

    EstimateReport r;
    r.config = config;
    r.hits = total.hits;
    r.misses = total.misses;
    r.undecided = total.undecided;
    const double n_trials = static_cast<double>(config.trials);
    r.p_hat = static_cast<double>(total.hits + total.undecided) / n_trials;
    r.p_hat_optimistic = static_cast<double>(total.hits) / n_trials;
    r.p_hat_rational = std::to_string(total.hits + total.undecided) + "/" +
                       std::to_string(config.trials);
    r.ci = wilson_interval(total.hits + total.undecided, config.trials);
    r.scaled_n = r.p_hat * config.n;
    r.scaled_n32 = r.p_hat * std::pow(config.n, 1.5);
    r.hits_at_plus1 = total.at_plus1;
    r.hits_at_minus1 = total.at_minus1;
    r.hits_low_degree = total.low_degree;
    r.hits_higher = total.higher;
    r.stage_filter_accept = total.filter_accept;
    r.stage_mod31_reject = total.mod31_reject;
    r.stage_mod62_reject = total.mod62_reject;
    r.stage_exact = total.exact;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string EstimateReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["config"] = config_json(config);
    j["hits"] = hits;
    j["misses"] = misses;
    j["undecided"] = undecided;
    j["p_hat"] = fmt17(p_hat);
    j["p_hat_optimistic"] = fmt17(p_hat_optimistic);
    j["p_hat_rational"] = p_hat_rational;
    j["wilson_ci_95"] = {fmt17(ci.lo), fmt17(ci.hi)};
    j["scaled_n"] = fmt17(scaled_n);
    j["scaled_n32"] = fmt17(scaled_n32);
    j["per_class_hits"] = {{"at_plus1", hits_at_plus1},
                           {"at_minus1", hits_at_minus1},
                           {"low_degree", hits_low_degree},
                           {"higher", hits_higher}};
    j["stages"] = {{"filter_accept", stage_filter_accept},
                   {"mod31_reject", stage_mod31_reject},
                   {"mod62_reject", stage_mod62_reject},
                   {"exact", stage_exact}};
    if (include_timing) j["seconds"] = seconds;
    return j.dump(2);
}

ExhaustiveResult exact_p_bruteforce(const CampaignConfig& config) {
    CampaignConfig cfg = config;
    cfg.mode = CampaignConfig::Mode::Exhaustive;
    cfg.validate();
    const int n = cfg.n;
    const int m = n + 1;
    const std::uint64_t count = 1ull << m;

    // materialize all sign vectors once
    std::vector<BernoulliPolyUni> polys(count);
    std::vector<char> zero_at1(count), zero_atm1(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        BernoulliPolyUni p;
        p.coeffs.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) p.coeffs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
        const auto [v1, vm1] = eval_at_pm1(p);
        zero_at1[mask] = v1 == 0;
        zero_atm1[mask] = vm1 == 0;
        polys[mask] = std::move(p);
    }

    ExhaustiveResult res;
    res.n = n;
    std::uint64_t hits = 0, b1 = 0, bm1 = 0, four = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        for (std::uint64_t j = i; j < count; ++j) {
            const std::uint64_t weight = i == j ? 1 : 2;  // unordered -> ordered
            if (zero_at1[i] && zero_at1[j]) b1 += weight;
            if (zero_atm1[i] && zero_atm1[j]) bm1 += weight;
            if (zero_at1[i] && zero_atm1[i] && zero_at1[j] && zero_atm1[j]) four += weight;
            if (common_root_exists(polys[i], polys[j])) hits += weight;
        }
    }
    res.pair_count = mpz_class(1) << (2 * m);
    res.hit_count = static_cast<unsigned long>(hits);
    res.both_at_plus1 = static_cast<unsigned long>(b1);
    res.both_at_minus1 = static_cast<unsigned long>(bm1);
    res.all_four = static_cast<unsigned long>(four);
    res.p_exact = mpq_class(res.hit_count, res.pair_count);
    res.p_exact.canonicalize();
    return res;
}

std::string ExhaustiveResult::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["pair_count"] = pair_count.get_str();
    j["hit_count"] = hit_count.get_str();
    j["p_exact"] = p_exact.get_str();
    j["p_exact_decimal"] = fmt17(p_exact.get_d());
    j["both_at_plus1"] = both_at_plus1.get_str();
    j["both_at_minus1"] = both_at_minus1.get_str();
    j["all_four"] = all_four.get_str();
    return j.dump(2);
}

std::string asymptotic_table(const std::vector<int>& n_list, long long trials,
                             std::uint64_t seed, bool timing) {
    std::ostringstream os;
    os << "n,p_hat,ci_lo,ci_hi,scaled,undecided_frac,seconds\n";
    for (int n : n_list) {
        CampaignConfig cfg;
        cfg.d = 1;
        cfg.ell = 2;
        cfg.n = n;
        cfg.trials = trials;
        cfg.master_seed = seed;
        const EstimateReport r = estimate_p(cfg);
        const double undec = static_cast<double>(r.undecided) /
                             static_cast<double>(r.config.trials);
        os << n << ',' << fmt17(r.p_hat) << ',' << fmt17(r.ci.lo) << ','
           << fmt17(r.ci.hi) << ',' << fmt17(r.scaled_n) << ',' << fmt17(undec)
           << ',' << fmt17(timing ? r.seconds : 0.0) << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::pair<std::string, AtomVector>> shipped_corpus() {
    std::vector<std::pair<std::string, AtomVector>> corpus;
    auto add_ints = [&](const std::string& name, std::vector<long> v) {
        std::vector<mpz_class> z(v.begin(), v.end());
        corpus.emplace_back(name, AtomVector::integers(std::move(z)));
    };
    add_ints("ones_m2", {1, 1});
    add_ints("ones_m4", {1, 1, 1, 1});
    add_ints("ones_m8", std::vector<long>(8, 1));
    add_ints("ones_m16", std::vector<long>(16, 1));
    add_ints("pm_ones", {1, -1, 1, -1});
    add_ints("range_m3", {1, 2, 3});
    add_ints("range_m4", {1, 2, 3, 4});
    add_ints("range_m8", {1, 2, 3, 4, 5, 6, 7, 8});
    add_ints("pm_pairs", {1, -1, 2, -2});
    add_ints("powers_of_two", {1, 2, 4, 8, 16});
    add_ints("mixed_m6", {1, 2, 3, 4, 5, 7});
    corpus.emplace_back("gauss_units",
                        AtomVector::gaussians({{mpq_class(1), mpq_class(0)},
                                               {mpq_class(0), mpq_class(1)},
                                               {mpq_class(1), mpq_class(1)}}));
    corpus.emplace_back("powers_of_i",
                        power_vector(IntPoly({mpz_class(1), mpz_class(0), mpz_class(1)}), 4));
    corpus.emplace_back("powers_of_phi",
                        power_vector(IntPoly({mpz_class(-1), mpz_class(-1), mpz_class(1)}), 6));
    return corpus;
}

}  // namespace

std::string bound_suite_json() {
    nlohmann::json out;
    double max_erdos_norm = 0, max_ss = 0, max_halasz = 0;
    std::string w_erdos, w_ss, w_halasz;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [name, vec] : shipped_corpus()) {
        const BoundReport r = bound_report(vec);
        // Erdos ratio normalized against the sharp central-binomial bound,
        // attained exactly by the all-ones vector.
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(r.atom.m),
                     static_cast<unsigned long>(r.atom.m) / 2);
        mpz_class denom = 1;
        mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(),
                     static_cast<unsigned long>(r.atom.m));
        mpq_class central(binom, denom);
        central.canonicalize();
        const mpq_class normalized = r.atom.probability / central;
        const double erdos_norm = normalized.get_d();
        nlohmann::json e;
        e["name"] = name;
        e["m"] = r.atom.m;
        e["probability"] = r.atom.probability.get_str();
        e["erdos_normalized"] = erdos_norm;
        e["erdos_ratio"] = r.erdos_ratio;
        if (r.ss_ratio) e["ss_ratio"] = *r.ss_ratio;
        e["halasz_ratio"] = r.halasz_ratio;
        e["couples"] = r.couples;
        entries.push_back(e);
        if (erdos_norm > max_erdos_norm) { max_erdos_norm = erdos_norm; w_erdos = name; }
        if (r.ss_ratio && *r.ss_ratio > max_ss) { max_ss = *r.ss_ratio; w_ss = name; }
        if (r.halasz_ratio > max_halasz) { max_halasz = r.halasz_ratio; w_halasz = name; }
    }
    out["entries"] = entries;
    out["max_erdos_normalized"] = max_erdos_norm;
    out["max_erdos_witness"] = w_erdos;
    out["max_ss_ratio"] = max_ss;
    out["max_ss_witness"] = w_ss;
    out["max_halasz_ratio"] = max_halasz;
    out["max_halasz_witness"] = w_halasz;
    return out.dump(2);
}

}  // namespace crl
