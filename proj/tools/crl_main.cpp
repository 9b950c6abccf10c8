// crl: common-root-likelihood experiments for random ±1 polynomials.
//
// Exit codes: 0 success, 2 configuration error, 3 assertion failure in
// acceptance-style checks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crl/atom.hpp"
#include "crl/classify.hpp"
#include "crl/dunomial.hpp"
#include "crl/experiment.hpp"
#include "crl/poly.hpp"

namespace {

using crl::AtomVector;
using crl::Complex;
using crl::ComplexPoint;
using crl::ExactPoint;
using crl::GaussQ;
using json = nlohmann::json;

bool looks_float(const std::string& s) {
    return s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
           s.find('E') != std::string::npos;
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return q;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Coordinate: "p/q" (exact) or decimal float; "re:im" marks a complex value
// and always takes the numeric path.
struct ParsedPoint {
    std::optional<ExactPoint> exact;
    ComplexPoint numeric;
};

ParsedPoint parse_point(const std::string& text) {
    ParsedPoint p;
    bool all_exact = true;
    std::vector<GaussQ> exact_coords;
    for (const std::string& coord : split(text, ',')) {
        const auto parts = split(coord, ':');
        if (parts.size() > 2) throw std::invalid_argument("bad coordinate: " + coord);
        const bool complex_form = parts.size() == 2;
        if (complex_form || looks_float(parts[0])) {
            all_exact = false;
            double re = std::stod(parts[0]);
            double im = complex_form ? std::stod(parts[1]) : 0.0;
            p.numeric.coords.emplace_back(re, im);
        } else {
            const mpq_class q = parse_rational(parts[0]);
            exact_coords.push_back(GaussQ{q, 0});
            p.numeric.coords.emplace_back(q.get_d(), 0.0);
        }
    }
    if (all_exact) p.exact = ExactPoint{std::move(exact_coords)};
    return p;
}

// Vector file: first line is the mode ("integer", "gauss", or
// "nf <modulus coefficients, lowest first>"), then one entry per line.
// gauss entries: "re" or "re im" as rationals; nf entries: residue
// coefficients as rationals, lowest first.
AtomVector read_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty file " + path);
    std::istringstream hs(header);
    std::string mode;
    hs >> mode;

    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }

    if (mode == "integer") {
        std::vector<mpz_class> v;
        for (const auto& line : lines) v.emplace_back(line);
        return AtomVector::integers(std::move(v));
    }
    if (mode == "gauss") {
        std::vector<GaussQ> v;
        for (const auto& line : lines) {
            std::istringstream ls(line);
            std::string re, im;
            ls >> re;
            GaussQ g{parse_rational(re), 0};
            if (ls >> im) g.im = parse_rational(im);
            v.push_back(g);
        }
        return AtomVector::gaussians(std::move(v));
    }
    if (mode == "nf") {
        std::vector<mpz_class> mod_coeffs;
        for (std::string tok; hs >> tok;) mod_coeffs.emplace_back(tok);
        crl::IntPoly modulus(std::move(mod_coeffs));
        std::vector<crl::NFElem> v;
        for (const auto& line : lines) {
            crl::NFElem e;
            std::istringstream ls(line);
            for (std::string tok; ls >> tok;) e.c.push_back(parse_rational(tok));
            e.trim();
            v.push_back(std::move(e));
        }
        return AtomVector::number_field(std::move(modulus), std::move(v));
    }
    throw std::invalid_argument("unknown mode '" + mode + "' (integer|gauss|nf)");
}

json dunomial_json(const crl::Dunomial& d) {
    return json{{"alpha", d.alpha},
                {"beta", d.beta},
                {"sign", d.sign},
                {"order", crl::dunomial_order(d)},
                {"degree", crl::dunomial_degree(d)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"common-root experiments for random ±1 polynomial systems"};
    app.require_subcommand(1);

    // estimate
    auto* est = app.add_subcommand("estimate", "Monte Carlo estimate of p(n, d)");
    crl::CampaignConfig cfg;
    bool no_filter = false, timing = false;
    est->add_option("--d", cfg.d, "number of variables")->capture_default_str();
    est->add_option("--n", cfg.n, "degree")->required();
    est->add_option("--ell", cfg.ell, "system size")->capture_default_str();
    est->add_option("--trials", cfg.trials, "trial count")->required();
    est->add_option("--seed", cfg.master_seed, "master seed")->capture_default_str();
    est->add_option("--prime-budget", cfg.prime_budget, "modular filter primes")
        ->capture_default_str();
    est->add_option("--tol", cfg.tol, "numeric tolerance (d=2)")->capture_default_str();
    est->add_flag("--no-filter", no_filter, "disable the ±1 pre-filter");
    est->add_flag("--timing", timing, "include wall time in the report");

    // exact
    auto* ex = app.add_subcommand("exact", "exhaustive exact p(n), d=1, n <= 10");
    int exact_n = 1;
    ex->add_option("--n", exact_n, "degree")->required();

    // table
    auto* tab = app.add_subcommand("table", "asymptotic CSV across degrees");
    std::string n_list_str;
    long long tab_trials = 100000;
    std::uint64_t tab_seed = 1;
    bool tab_timing = false;
    tab->add_option("--n", n_list_str, "comma-separated degree list")->required();
    tab->add_option("--trials", tab_trials, "trials per degree")->capture_default_str();
    tab->add_option("--seed", tab_seed, "master seed")->capture_default_str();
    tab->add_flag("--timing", tab_timing, "fill the seconds column");

    // lo
    auto* lo = app.add_subcommand("lo", "Littlewood-Offord bound report");
    std::string lo_input;
    bool lo_suite = false;
    lo->add_option("--input", lo_input, "vector file (mode header + entries)");
    lo->add_flag("--suite", lo_suite, "run the shipped corpus instead");

    // dunomial
    auto* dun = app.add_subcommand("dunomial", "two-term relation calculus");
    dun->require_subcommand(1);
    auto* rofx = dun->add_subcommand("r-of-x", "minimal vanishing order at a point");
    std::string rofx_point;
    int rofx_cap = 16;
    double dun_tol = 1e-9;
    rofx->add_option("--point", rofx_point, "coordinates, e.g. 2,1/2")->required();
    rofx->add_option("--cap", rofx_cap, "degree cap")->capture_default_str();
    rofx->add_option("--tol", dun_tol, "numeric tolerance")->capture_default_str();
    auto* dcount = dun->add_subcommand("count", "satisfied dunomials of degree <= n");
    std::string count_point;
    int count_n = 2;
    double count_tol = 1e-9;
    dcount->add_option("--point", count_point, "coordinates")->required();
    dcount->add_option("--n", count_n, "degree cap")->required();
    dcount->add_option("--tol", count_tol, "numeric tolerance")->capture_default_str();
    auto* denum = dun->add_subcommand("enumerate", "list dunomials");
    int enum_d = 2, enum_order = 0, enum_degree = 0;
    denum->add_option("--d", enum_d, "number of variables")->capture_default_str();
    auto* opt_order =
        denum->add_option("--order", enum_order, "reduced dunomials of this order");
    auto* opt_degree =
        denum->add_option("--max-degree", enum_degree, "all dunomials up to this degree");
    opt_order->excludes(opt_degree);

    // classify
    auto* cls = app.add_subcommand("classify", "factor classes of gcd(p, q), d=1");
    std::string cls_p, cls_q;
    cls->add_option("--p", cls_p, "sign string, lowest coefficient first")->required();
    cls->add_option("--q", cls_q, "sign string")->required();

    // classify-point
    auto* clp = app.add_subcommand("classify-point", "zone Z1/Z2/Z3 of a point");
    std::string clp_point;
    int clp_n = 4;
    double clp_tol = 1e-9;
    clp->add_option("--point", clp_point, "coordinates, re or re:im each")->required();
    clp->add_option("--n", clp_n, "dunomial degree cap")->capture_default_str();
    clp->add_option("--tol", clp_tol, "tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*est) {
            cfg.use_filter = !no_filter;
            cfg.mode = crl::CampaignConfig::Mode::MonteCarlo;
            std::cout << crl::estimate_p(cfg).to_json(timing) << "\n";
        } else if (*ex) {
            crl::CampaignConfig c;
            c.n = exact_n;
            c.mode = crl::CampaignConfig::Mode::Exhaustive;
            c.trials = 1;
            std::cout << crl::exact_p_bruteforce(c).to_json() << "\n";
        } else if (*tab) {
            std::vector<int> ns;
            for (const auto& tok : split(n_list_str, ','))
                ns.push_back(std::stoi(tok));
            std::cout << crl::asymptotic_table(ns, tab_trials, tab_seed, tab_timing);
        } else if (*lo) {
            if (lo_suite != lo_input.empty())
                throw std::invalid_argument("lo needs exactly one of --input, --suite");
            if (lo_suite)
                std::cout << crl::bound_suite_json() << "\n";
            else
                std::cout << crl::bound_report(read_vector_file(lo_input)).to_json()
                          << "\n";
        } else if (*rofx) {
            const ParsedPoint p = parse_point(rofx_point);
            std::optional<int> r =
                p.exact ? crl::r_of_x_exact(*p.exact, rofx_cap)
                        : crl::r_of_x_numeric(p.numeric, rofx_cap, dun_tol);
            json j{{"point", rofx_point},
                   {"cap", rofx_cap},
                   {"exact", p.exact.has_value()},
                   {"r", r ? json(*r) : json(nullptr)}};
            std::cout << j.dump() << "\n";
        } else if (*dcount) {
            const ParsedPoint p = parse_point(count_point);
            const std::uint64_t c =
                p.exact ? crl::count_satisfied_exact(*p.exact, count_n)
                        : crl::count_satisfied_numeric(p.numeric, count_n, count_tol);
            json j{{"point", count_point},
                   {"n", count_n},
                   {"exact", p.exact.has_value()},
                   {"count", c}};
            std::cout << j.dump() << "\n";
        } else if (*denum) {
            if (opt_order->count() == opt_degree->count())
                throw std::invalid_argument(
                    "enumerate needs exactly one of --order, --max-degree");
            const auto list = opt_order->count()
                                  ? crl::enumerate_reduced_by_order(enum_d, enum_order)
                                  : crl::enumerate_dunomials(enum_d, enum_degree);
            json j = json::array();
            for (const auto& d : list) j.push_back(dunomial_json(d));
            std::cout << json{{"d", enum_d}, {"count", list.size()}, {"dunomials", j}}
                             .dump()
                      << "\n";
        } else if (*cls) {
            const auto p = crl::from_sign_string(cls_p);
            const auto q = crl::from_sign_string(cls_q);
            std::cout << crl::to_json(crl::classify_common_roots_1d(p, q)) << "\n";
        } else if (*clp) {
            const ParsedPoint p = parse_point(clp_point);
            std::cout << crl::to_json(crl::classify_point(p.numeric, clp_n, clp_tol))
                      << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
