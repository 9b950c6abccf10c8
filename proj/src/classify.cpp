#include "crl/classify.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "crl/atom.hpp"

namespace crl {

std::vector<Complex> annulus_filter(const std::vector<Complex>& roots, double eps) {
    std::vector<Complex> out;
    for (Complex r : roots) {
        const double a = std::abs(r);
        if (a > 0.5 - eps && a < 2.0 + eps) out.push_back(r);
    }
    return out;
}

std::vector<CandidatePoly> enumerate_candidates(int max_algebraic_degree) {
    if (max_algebraic_degree != 1 && max_algebraic_degree != 2) {
        throw std::invalid_argument("enumerate_candidates: degree must be 1 or 2");
    }
    std::vector<CandidatePoly> out;
    out.push_back({IntPoly({mpz_class(-1), mpz_class(1)}), 1});  // x - 1
    out.push_back({IntPoly({mpz_class(1), mpz_class(1)}), 1});   // x + 1
    if (max_algebraic_degree == 1) return out;

    for (int a = -4; a <= 4; ++a) {
        for (int b = -4; b <= 4; ++b) {
            // x^2 - a x - b
            const int disc = a * a + 4 * b;
            if (disc >= 0) {
                const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(disc))));
                if (s * s == disc) continue;  // rational roots, reducible
                const double sq = std::sqrt(static_cast<double>(disc));
                const double r1 = std::abs((a + sq) / 2.0);
                const double r2 = std::abs((a - sq) / 2.0);
                if (r1 < 0.5 - 1e-9 || r1 > 2.0 + 1e-9) continue;
                if (r2 < 0.5 - 1e-9 || r2 > 2.0 + 1e-9) continue;
            } else {
                // conjugate pair, |rho|^2 = -b exactly
                if (-b < 1 || -b > 4) continue;
            }
            out.push_back({IntPoly({mpz_class(-b), mpz_class(-a), mpz_class(1)}), 2});
        }
    }
    return out;
}

DecompTerms decompose_terms(int n) {
    if (n < 1) throw std::invalid_argument("decompose_terms: n must be >= 1");
    const unsigned long m = static_cast<unsigned long>(n) + 1;
    const mpq_class w = walk_return_prob(m);
    DecompTerms t;
    t.term_i = w * w;
    t.term_ii = t.term_i;
    // coefficients at even / odd indices form independent walks
    const unsigned long evens = static_cast<unsigned long>(n / 2) + 1;
    const mpq_class both = walk_return_prob(evens) * walk_return_prob(m - evens);
    t.term_iii = -(both * both);
    return t;
}

std::vector<FactorClass> classify_common_roots_1d(const BernoulliPolyUni& p,
                                                  const BernoulliPolyUni& q) {
    std::vector<FactorClass> out;
    if (p.degree() < 1 || q.degree() < 1) return out;
    IntPoly g = gcd_int(to_int_poly(p), to_int_poly(q));
    if (g.degree() < 1) return out;

    auto peel = [&g](const IntPoly& factor) {
        int mult = 0;
        while (g.degree() >= factor.degree()) {
            auto quo = g.divide_exact(factor);
            if (!quo) break;
            g = std::move(*quo);
            ++mult;
        }
        return mult;
    };

    for (const CandidatePoly& cand : enumerate_candidates(2)) {
        if (g.degree() < 1) break;
        const int mult = peel(cand.poly);
        if (mult == 0) continue;
        RootClass cls;
        if (cand.algebraic_degree == 1) {
            cls.tag = RootClass::Tag::RationalPM1;
            // x - 1 has root +1; x + 1 has root -1
            cls.which = cand.poly.coeffs()[0] < 0 ? 1 : -1;
        } else {
            cls.tag = RootClass::Tag::LowDegree;
            cls.candidate = cand;
        }
        out.push_back({cand.poly, cls, mult});
    }
    if (g.degree() >= 1) {
        RootClass cls;
        cls.tag = RootClass::Tag::Higher;
        out.push_back({g, cls, 1});
    }
    return out;
}

ZoneTag classify_point(const ComplexPoint& x, int n, double tol) {
    ZoneTag z;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (std::abs(x.coords[i]) < tol) {
            z.tag = ZoneTag::Tag::Z1;
            z.zero_coord_index = static_cast<int>(i);
            return z;
        }
    }
    const int d = static_cast<int>(x.coords.size());
    for (int r = 1; r <= 2 * n; ++r) {
        for (const Exponent& delta : canonical_deltas_of_order(d, r)) {
            Exponent alpha(delta.size()), beta(delta.size());
            int deg_pos = 0, deg_neg = 0;
            for (std::size_t i = 0; i < delta.size(); ++i) {
                alpha[i] = std::max(delta[i], 0);
                beta[i] = std::max(-delta[i], 0);
                deg_pos += alpha[i];
                deg_neg += beta[i];
            }
            if (std::max(deg_pos, deg_neg) > n) continue;
            for (int sign : {-1, +1}) {
                const Dunomial cand{alpha, beta, sign};
                if (satisfied_numeric(cand, x, tol)) {
                    z.tag = ZoneTag::Tag::Z2;
                    z.witness = cand;
                    return z;
                }
            }
        }
    }
    z.tag = ZoneTag::Tag::Z3;
    return z;
}

std::string to_json(const std::vector<FactorClass>& classes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& fc : classes) {
        nlohmann::json j;
        j["factor"] = fc.factor.to_string();
        j["multiplicity"] = fc.multiplicity;
        switch (fc.cls.tag) {
            case RootClass::Tag::RationalPM1:
                j["class"] = "RationalPM1";
                j["root"] = fc.cls.which;
                break;
            case RootClass::Tag::LowDegree:
                j["class"] = "LowDegree";
                j["algebraic_degree"] = fc.cls.candidate->algebraic_degree;
                break;
            case RootClass::Tag::Higher:
                j["class"] = "Higher";
                break;
        }
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::string to_json(const ZoneTag& tag) {
    nlohmann::json j;
    switch (tag.tag) {
        case ZoneTag::Tag::Z1:
            j["zone"] = "Z1";
            j["zero_coord_index"] = tag.zero_coord_index;
            break;
        case ZoneTag::Tag::Z2: {
            j["zone"] = "Z2";
            nlohmann::json w;
            w["alpha"] = tag.witness->alpha;
            w["beta"] = tag.witness->beta;
            w["sign"] = tag.witness->sign;
            w["order"] = dunomial_order(*tag.witness);
            j["witness"] = w;
            break;
        }
        case ZoneTag::Tag::Z3:
            j["zone"] = "Z3";
            break;
    }
    return j.dump(2);
}

}  // namespace crl
