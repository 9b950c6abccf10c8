#include "crl/intpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "crl/modular.hpp"

namespace crl {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(mpz_class v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(mpz_class v, std::size_t k) {
    IntPoly p;
    if (v != 0) {
        p.c_.assign(k + 1, mpz_class(0));
        p.c_[k] = std::move(v);
    }
    return p;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<mpz_class> r(c_.size() + k, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v /= g;
    return IntPoly(std::move(r));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (is_zero()) return IntPoly{};
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<mpz_class> rem(c_);
    std::vector<mpz_class> quo(c_.size() - divisor.c_.size() + 1, mpz_class(0));
    const mpz_class& lead = divisor.leading();
    for (std::size_t i = rem.size(); i-- >= divisor.c_.size();) {
        if (rem[i] == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        const std::size_t off = i - (divisor.c_.size() - 1);
        quo[off] = q;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j) {
            rem[off + j] -= q * divisor.c_[j];
        }
    }
    for (const auto& v : rem) {
        if (v != 0) return std::nullopt;
    }
    return IntPoly(std::move(quo));
}

IntPoly IntPoly::pseudo_rem(const IntPoly& g) const {
    if (g.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
    IntPoly r = *this;
    const int dg = g.degree();
    int steps = degree() - dg + 1;
    if (steps < 0) steps = 0;
    while (!r.is_zero() && r.degree() >= dg) {
        const mpz_class q = r.leading();
        const std::size_t off = static_cast<std::size_t>(r.degree() - dg);
        r = r * g.leading() - (g * q).shifted(off);
        --steps;
    }
    // match the lc(g)^(deg f - deg g + 1) normalization exactly
    if (steps > 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), g.leading().get_mpz_t(),
                   static_cast<unsigned long>(steps));
        r = r * scale;
    }
    return r;
}

std::string IntPoly::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i].get_str();
    }
    if (c_.empty()) os << '0';
    return os.str();
}

IntPoly IntPoly::from_string(const std::string& s) {
    std::istringstream is(s);
    std::vector<mpz_class> c;
    std::string tok;
    while (is >> tok) c.emplace_back(tok);
    return IntPoly(std::move(c));
}

IntPoly to_int_poly(const BernoulliPolyUni& p) {
    std::vector<mpz_class> c(p.coeffs.size());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] = p.coeffs[i];
    return IntPoly(std::move(c));
}

IntPoly gcd_subresultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) {
        throw std::invalid_argument("gcd: both inputs zero");
    }
    if (f.is_zero()) return g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    IntPoly a = f.primitive_part();
    IntPoly b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    // Cohen, Alg. 3.3.1 (subresultant PRS)
    mpz_class gg = 1, h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        IntPoly r = a.pseudo_rem(b);
        if (r.is_zero()) return b.primitive_part();
        if (r.degree() == 0) return IntPoly::constant(1);
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        const mpz_class denom = gg * hd;
        a = b;
        auto q = r.divide_exact(IntPoly::constant(denom));
        if (!q) throw std::logic_error("subresultant PRS: inexact division");
        b = *q;
        gg = a.leading();
        // h = g^delta * h^(1-delta)
        mpz_class gd;
        mpz_pow_ui(gd.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gd;
        } else {
            mpz_class hpow;
            mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(),
                       static_cast<unsigned long>(delta - 1));
            h = gd / hpow;
        }
    }
}

IntPoly gcd_int(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) {
        throw std::invalid_argument("gcd_int: both inputs zero");
    }
    if (f.is_zero()) return g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    const IntPoly fp = f.primitive_part();
    const IntPoly gp = g.primitive_part();
    if (fp.degree() == 0 || gp.degree() == 0) return IntPoly::constant(1);

    mpz_class lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), fp.leading().get_mpz_t(), gp.leading().get_mpz_t());

    int best_deg = -1;
    std::vector<mpz_class> crt_coeffs;
    mpz_class modulus = 1;

    for (std::uint64_t p : kPrimes62) {
        if (mpz_mod_u64(fp.leading(), p) == 0 || mpz_mod_u64(gp.leading(), p) == 0) {
            continue;
        }
        PolyMod hp = monic_gcd_mod(reduce_mpz_mod(fp.coeffs(), p),
                                   reduce_mpz_mod(gp.coeffs(), p), p);
        const int dp = static_cast<int>(hp.size()) - 1;
        if (dp == 0) return IntPoly::constant(1);
        if (best_deg != -1 && dp > best_deg) continue;  // unlucky prime
        if (best_deg == -1 || dp < best_deg) {
            best_deg = dp;
            crt_coeffs.assign(static_cast<std::size_t>(dp) + 1, mpz_class(0));
            modulus = 1;
        }
        // scale the monic image so the leading coefficient is gcd(lc f, lc g)
        const std::uint64_t scale = mpz_mod_u64(lc_gcd, p);
        for (std::size_t i = 0; i < hp.size(); ++i) {
            mpz_class m = modulus;
            crt_combine(crt_coeffs[i], m, mulmod(hp[i], scale, p), p);
        }
        modulus *= static_cast<unsigned long>(p);

        std::vector<mpz_class> cand(crt_coeffs.size());
        for (std::size_t i = 0; i < cand.size(); ++i) {
            cand[i] = symmetric_rep(crt_coeffs[i], modulus);
        }
        IntPoly h = IntPoly(std::move(cand)).primitive_part();
        if (!h.is_zero() && h.degree() == best_deg &&
            fp.divide_exact(h) && gp.divide_exact(h)) {
            return h;
        }
    }
    // prime list exhausted without certification; fall back to the PRS path
    return gcd_subresultant(f, g);
}

namespace {

// upper bound on log2 |Res(f, g)| via Hadamard row norms
double resultant_log2_bound(const IntPoly& f, const IntPoly& g) {
    auto log2_norm = [](const IntPoly& p) {
        double max_bits = 0;
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            max_bits = std::max(
                max_bits,
                static_cast<double>(mpz_sizeinbase(c.get_mpz_t(), 2)));
        }
        return max_bits + 0.5 * std::log2(static_cast<double>(p.coeffs().size()));
    };
    return g.degree() * log2_norm(f) + f.degree() * log2_norm(g) + 1.0;
}

}  // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("resultant: zero input");
    }
    if (f.degree() == 0 && g.degree() == 0) return 1;
    const double bound_bits = resultant_log2_bound(f, g);
    mpz_class value = 0, modulus = 1;
    double bits_have = 0;
    for (std::uint64_t p : kPrimes62) {
        if (mpz_mod_u64(f.leading(), p) == 0 || mpz_mod_u64(g.leading(), p) == 0) {
            continue;  // degree would drop mod p
        }
        const std::uint64_t rp = resultant_mod(reduce_mpz_mod(f.coeffs(), p),
                                               reduce_mpz_mod(g.coeffs(), p), p);
        crt_combine(value, modulus, rp, p);
        bits_have += 61.9;
        if (bits_have > bound_bits + 1) {
            return symmetric_rep(value, modulus);
        }
    }
    throw std::runtime_error("resultant: Hadamard bound exceeds baked-in prime capacity");
}

mpz_class resultant_sylvester_bareiss(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("resultant: zero input");
    }
    const int m = f.degree(), n = g.degree();
    const int size = m + n;
    if (size == 0) return 1;
    // Sylvester matrix, f-rows first
    std::vector<std::vector<mpz_class>> a(
        static_cast<std::size_t>(size),
        std::vector<mpz_class>(static_cast<std::size_t>(size), mpz_class(0)));
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j <= m; ++j) a[r][r + j] = f.coeffs()[m - j];
    }
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = g.coeffs()[n - j];
    }
    // Bareiss fraction-free elimination
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i) {
                if (a[i][k] != 0) { swap_row = i; break; }
            }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[size - 1][size - 1];
}

std::string ResultantVerdict::to_json() const {
    nlohmann::json j;
    switch (tag) {
        case Tag::NonzeroCertified: j["tag"] = "NonzeroCertified"; break;
        case Tag::ZeroCertified: j["tag"] = "ZeroCertified"; break;
        case Tag::Undecided: j["tag"] = "Undecided"; break;
    }
    if (witness_prime) j["witness_prime"] = *witness_prime;
    if (exact_value) j["exact_value"] = exact_value->get_str();
    return j.dump();
}

ResultantVerdict modular_resultant_filter(const IntPoly& f, const IntPoly& g,
                                          int prime_budget) {
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("modular_resultant_filter: zero input");
    }
    ResultantVerdict v;
    int used = 0;
    for (std::uint64_t p : kPrimes62) {
        if (used >= prime_budget) break;
        if (mpz_mod_u64(f.leading(), p) == 0 || mpz_mod_u64(g.leading(), p) == 0) {
            continue;
        }
        ++used;
        if (resultant_mod(reduce_mpz_mod(f.coeffs(), p),
                          reduce_mpz_mod(g.coeffs(), p), p) != 0) {
            v.tag = ResultantVerdict::Tag::NonzeroCertified;
            v.witness_prime = p;
            return v;
        }
    }
    v.tag = ResultantVerdict::Tag::Undecided;
    return v;
}

}  // namespace crl
