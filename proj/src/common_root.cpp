#include "crl/common_root.hpp"

#include <algorithm>
#include <cmath>

#include "crl/modular.hpp"
#include "crl/roots.hpp"

namespace crl {

namespace {

// Fixed-modulus resultant for the word-sized filter prime: the compiler
// lowers % kPrime31 to multiply-shift, which matters in the trial hot loop.
std::uint64_t resultant_mod31(PolyMod f, PolyMod g) {
    constexpr std::uint64_t P = kPrime31;
    if (f.empty() || g.empty()) return 0;
    auto mul = [](std::uint64_t a, std::uint64_t b) { return a * b % P; };
    auto pw = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t res = 1;
    bool negate = false;
    while (true) {
        if (g.size() == 1) {
            res = mul(res, pw(g[0], f.size() - 1));
            break;
        }
        const std::size_t df = f.size() - 1, dg = g.size() - 1;
        if (df < dg) {
            if ((df & 1) && (dg & 1)) negate = !negate;
            std::swap(f, g);
            continue;
        }
        const std::uint64_t inv_lg = pw(g.back(), P - 2);
        while (f.size() >= g.size()) {
            const std::uint64_t q = mul(f.back(), inv_lg);
            if (q != 0) {
                const std::size_t off = f.size() - g.size();
                for (std::size_t i = 0; i + 1 < g.size(); ++i) {
                    f[off + i] = (f[off + i] + P - mul(q, g[i])) % P;
                }
            }
            f.pop_back();
            while (!f.empty() && f.back() == 0) f.pop_back();
        }
        if (f.empty()) return 0;
        res = mul(res, pw(g.back(), df - (f.size() - 1)));
        if ((df & 1) && (dg & 1)) negate = !negate;
        std::swap(f, g);
    }
    if (negate && res != 0) res = P - res;
    return res;
}

PolyMod signs_mod31(const std::vector<int>& signs) {
    PolyMod f(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        f[i] = signs[i] > 0 ? 1 : kPrime31 - 1;
    }
    return f;  // leading coefficient is ±1, never zero
}

}  // namespace

bool common_root_exists(const BernoulliPolyUni& p, const BernoulliPolyUni& q,
                        bool use_filter, int prime_budget, DecisionStage* stage) {
    const auto set = [&](DecisionStage s) {
        if (stage) *stage = s;
    };
    if (p.degree() < 1 || q.degree() < 1) {  // ±1 constants have no roots
        set(DecisionStage::Degenerate);
        return false;
    }
    if (use_filter) {
        const auto [p1, pm1] = eval_at_pm1(p);
        const auto [q1, qm1] = eval_at_pm1(q);
        if ((p1 == 0 && q1 == 0) || (pm1 == 0 && qm1 == 0)) {
            set(DecisionStage::FilterAccept);
            return true;
        }
    }
    if (resultant_mod31(signs_mod31(p.coeffs), signs_mod31(q.coeffs)) != 0) {
        set(DecisionStage::Mod31Reject);
        return false;
    }
    const IntPoly f = to_int_poly(p);
    const IntPoly g = to_int_poly(q);
    if (modular_resultant_filter(f, g, prime_budget).tag ==
        ResultantVerdict::Tag::NonzeroCertified) {
        set(DecisionStage::Mod62Reject);
        return false;
    }
    set(DecisionStage::Exact);
    return gcd_int(f, g).degree() >= 1;
}

CommonRoot2dResult common_root_exists_2d(const BernoulliPolyMulti& p1,
                                         const BernoulliPolyMulti& p2,
                                         const BernoulliPolyMulti& p3,
                                         double tol, int prime_budget) {
    CommonRoot2dResult out;
    if (p1.degree_n < 1 || p2.degree_n < 1 || p3.degree_n < 1) {
        out.verdict = Verdict2d::No;
        return out;
    }
    const BivarIntPoly b1 = to_bivar(p1);
    const BivarIntPoly b2 = to_bivar(p2);
    const BivarIntPoly b3 = to_bivar(p3);

    // modular fast reject: gcd of the two eliminants constant mod p
    int used = 0;
    for (std::uint64_t prime : kPrimes62) {
        if (used >= prime_budget) break;
        ++used;
        PolyMod r12 = eliminate_y_mod(b1, b2, prime);
        PolyMod r13 = eliminate_y_mod(b1, b3, prime);
        if (r12.empty() || r13.empty()) break;  // degenerate, go exact
        if (monic_gcd_mod(std::move(r12), std::move(r13), prime).size() == 1) {
            out.verdict = Verdict2d::No;
            return out;
        }
    }

    const IntPoly r12 = eliminate_y(b1, b2);
    const IntPoly r13 = eliminate_y(b1, b3);

    std::vector<Complex> candidates;
    bool probing = false;
    if (r12.is_zero() && r13.is_zero()) {
        // P1 shares a curve with both P2 and P3; probe fixed generic lines.
        probing = true;
        candidates = {Complex(0.731, 0.247), Complex(-1.113, 0.409),
                      Complex(0.252, -0.918)};
    } else {
        IntPoly g;
        if (r12.is_zero()) g = r13.primitive_part();
        else if (r13.is_zero()) g = r12.primitive_part();
        else g = gcd_int(r12, r13);
        if (g.degree() == 0) {
            out.verdict = Verdict2d::No;
            return out;
        }
        candidates = numeric_roots(g);
    }

    auto residual_scale = [&](Complex x, Complex y) {
        // sum of monomial magnitudes, the natural scale of |P(x, y)|
        const double ax = std::max(std::abs(x), 1e-30);
        const double ay = std::max(std::abs(y), 1e-30);
        double s = 0;
        for (int i = 0; i <= p1.degree_n; ++i) {
            for (int j = 0; i + j <= p1.degree_n; ++j) {
                s += std::pow(ax, i) * std::pow(ay, j);
            }
        }
        return std::max(s, 1.0);
    };

    double best_ratio = 1e300;
    for (Complex xs : candidates) {
        const auto fiber1 = fiber_coeffs(b1, xs);
        for (Complex ys : numeric_roots(fiber1)) {
            const ComplexPoint pt{{xs, ys}};
            const double scale = residual_scale(xs, ys);
            const double resid = std::max({std::abs(eval(p1, pt)),
                                           std::abs(eval(p2, pt)),
                                           std::abs(eval(p3, pt))}) / scale;
            best_ratio = std::min(best_ratio, resid);
            if (resid < tol) {
                out.verdict = Verdict2d::Yes;
                out.witness = pt;
                return out;
            }
        }
    }
    // clear separation from zero -> No; anything murky stays Undecided.
    // The probe path can never certify absence.
    out.verdict = (!probing && best_ratio > 1e-4) ? Verdict2d::No
                                                  : Verdict2d::Undecided;
    return out;
}

}  // namespace crl
