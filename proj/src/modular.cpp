#include "crl/modular.hpp"

#include <stdexcept>

namespace crl {

const std::vector<std::uint64_t> kPrimes62 = {
    4611686018427387847ull,
    4611686018427387817ull,
    4611686018427387787ull,
    4611686018427387761ull,
    4611686018427387751ull,
    4611686018427387737ull,
    4611686018427387733ull,
    4611686018427387709ull,
    4611686018427387701ull,
    4611686018427387631ull,
    4611686018427387617ull,
    4611686018427387587ull,
    4611686018427387461ull,
    4611686018427387421ull,
    4611686018427387409ull,
    4611686018427387329ull,
    4611686018427387323ull,
    4611686018427387301ull,
    4611686018427387271ull,
    4611686018427387241ull,
    4611686018427387139ull,
    4611686018427387131ull,
    4611686018427387127ull,
    4611686018427387113ull,
    4611686018427387091ull,
    4611686018427387073ull,
    4611686018427386981ull,
    4611686018427386923ull,
    4611686018427386911ull,
    4611686018427386903ull,
    4611686018427386897ull,
    4611686018427386887ull,
    4611686018427386707ull,
    4611686018427386663ull,
    4611686018427386611ull,
    4611686018427386551ull,
    4611686018427386471ull,
    4611686018427386389ull,
    4611686018427386351ull,
    4611686018427386329ull,
};

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    return powmod(a, p - 2, p);
}

PolyMod trim_mod(PolyMod f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PolyMod reduce_signs_mod(const std::vector<int>& signs, std::uint64_t p) {
    PolyMod f(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        f[i] = signs[i] > 0 ? 1 : p - 1;
    }
    return trim_mod(std::move(f));
}

PolyMod reduce_mpz_mod(const std::vector<mpz_class>& coeffs, std::uint64_t p) {
    PolyMod f(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = mpz_mod_u64(coeffs[i], p);
    return trim_mod(std::move(f));
}

PolyMod mul_mod(const PolyMod& f, const PolyMod& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    PolyMod h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            h[i + j] = (h[i + j] + mulmod(f[i], g[j], p)) % p;
        }
    }
    return trim_mod(std::move(h));
}

void rem_mod(PolyMod& f, const PolyMod& g, std::uint64_t p) {
    const std::uint64_t inv_lg = invmod(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint64_t q = mulmod(f.back(), inv_lg, p);
        if (q != 0) {
            const std::size_t off = f.size() - g.size();
            for (std::size_t i = 0; i + 1 < g.size(); ++i) {
                const std::uint64_t t = mulmod(q, g[i], p);
                f[off + i] = (f[off + i] + p - t) % p;
            }
        }
        f.pop_back();
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
}

PolyMod monic_gcd_mod(PolyMod f, PolyMod g, std::uint64_t p) {
    while (!g.empty()) {
        rem_mod(f, g, p);
        std::swap(f, g);
    }
    if (!f.empty()) {
        const std::uint64_t inv = invmod(f.back(), p);
        for (auto& c : f) c = mulmod(c, inv, p);
    }
    return f;
}

std::uint64_t resultant_mod(PolyMod f, PolyMod g, std::uint64_t p) {
    if (f.empty() || g.empty()) return 0;
    // Res(f, g) with the Euclidean recurrence
    //   Res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r)
    // where r = f mod g.
    std::uint64_t res = 1;
    bool negate = false;
    while (true) {
        if (g.size() == 1) {
            res = mulmod(res, powmod(g[0], f.size() - 1, p), p);
            break;
        }
        const std::size_t df = f.size() - 1, dg = g.size() - 1;
        if (df < dg) {
            if ((df & 1) && (dg & 1)) negate = !negate;
            std::swap(f, g);
            continue;
        }
        rem_mod(f, g, p);
        if (f.empty()) return 0;
        const std::size_t dr = f.size() - 1;
        res = mulmod(res, powmod(g.back(), df - dr, p), p);
        if ((df & 1) && (dg & 1)) negate = !negate;
        std::swap(f, g);
    }
    if (negate && res != 0) res = p - res;
    return res;
}

void crt_combine(mpz_class& value, mpz_class& modulus, std::uint64_t r,
                 std::uint64_t p) {
    // value' = value + modulus * t, t = (r - value) / modulus mod p
    const std::uint64_t vp = mpz_mod_u64(value, p);
    const std::uint64_t mp = mpz_mod_u64(modulus, p);
    if (mp == 0) throw std::logic_error("crt_combine: repeated prime");
    const std::uint64_t t = mulmod((r + p - vp) % p, invmod(mp, p), p);
    value += modulus * mpz_class(static_cast<unsigned long>(t));
    modulus *= static_cast<unsigned long>(p);
}

mpz_class symmetric_rep(const mpz_class& x, const mpz_class& m) {
    mpz_class r = x % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

}  // namespace crl
