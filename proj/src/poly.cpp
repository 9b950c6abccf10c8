#include "crl/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crl {

namespace {

void emit_exponents(int d, int pos, int remaining, Exponent& cur,
                    std::vector<Exponent>& out) {
    if (pos == d) {
        out.push_back(cur);
        return;
    }
    if (pos == d - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int j = 0; j <= remaining; ++j) {
        cur[pos] = j;
        emit_exponents(d, pos + 1, remaining - j, cur, out);
        cur[pos] = 0;
    }
}

}  // namespace

std::vector<Exponent> graded_lex_exponents(int d, int n) {
    if (d < 1) throw std::invalid_argument("graded_lex_exponents: d must be >= 1");
    std::vector<Exponent> out;
    Exponent cur(static_cast<std::size_t>(d), 0);
    for (int total = 0; total <= n; ++total) {
        emit_exponents(d, 0, total, cur, out);
    }
    return out;
}

std::uint64_t exponent_count(int d, int n) {
    // C(n+d, d) with 64-bit intermediate; exact for all sizes used here.
    std::uint64_t c = 1;
    for (int i = 1; i <= d; ++i) {
        c = c * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
    }
    return c;
}

BernoulliPolyUni sample_uni(int n, Seed seed) {
    if (n < 0) throw std::invalid_argument("sample_uni: n must be >= 0");
    RandomStream rs(seed);
    BernoulliPolyUni p;
    p.coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (auto& c : p.coeffs) c = rs.next_sign();
    return p;
}

BernoulliPolyMulti sample_multi(int d, int n, Seed seed) {
    if (d < 1) throw std::invalid_argument("sample_multi: d must be >= 1");
    if (n < 0) throw std::invalid_argument("sample_multi: n must be >= 0");
    RandomStream rs(seed);
    BernoulliPolyMulti p;
    p.d = d;
    p.degree_n = n;
    p.coeffs.resize(exponent_count(d, n));
    for (auto& c : p.coeffs) c = rs.next_sign();
    return p;
}

Complex eval(const BernoulliPolyUni& p, Complex x) {
    Complex acc = 0.0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = acc * x + static_cast<double>(*it);
    }
    return acc;
}

Complex eval(const BernoulliPolyMulti& p, const ComplexPoint& x) {
    if (static_cast<int>(x.coords.size()) != p.d) {
        throw std::invalid_argument("eval: point dimension mismatch");
    }
    const auto exps = graded_lex_exponents(p.d, p.degree_n);
    Complex acc = 0.0;
    for (std::size_t t = 0; t < exps.size(); ++t) {
        Complex mono = 1.0;
        for (int i = 0; i < p.d; ++i) {
            for (int e = 0; e < exps[t][static_cast<std::size_t>(i)]; ++e) {
                mono *= x.coords[static_cast<std::size_t>(i)];
            }
        }
        acc += static_cast<double>(p.coeffs[t]) * mono;
    }
    return acc;
}

std::pair<long long, long long> eval_at_pm1(const BernoulliPolyUni& p) {
    long long at1 = 0, atm1 = 0;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        at1 += p.coeffs[i];
        atm1 += (i % 2 == 0) ? p.coeffs[i] : -p.coeffs[i];
    }
    return {at1, atm1};
}

std::string to_sign_string(const BernoulliPolyUni& p) {
    std::string s;
    s.reserve(p.coeffs.size());
    for (Sign c : p.coeffs) s.push_back(c > 0 ? '+' : '-');
    return s;
}

BernoulliPolyUni from_sign_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("from_sign_string: empty string");
    BernoulliPolyUni p;
    p.coeffs.reserve(s.size());
    for (char ch : s) {
        if (ch == '+') p.coeffs.push_back(1);
        else if (ch == '-') p.coeffs.push_back(-1);
        else throw std::invalid_argument("from_sign_string: expected only '+'/'-'");
    }
    return p;
}

std::string serialize(const BernoulliPolyMulti& p) {
    std::ostringstream os;
    os << p.d << ' ' << p.degree_n << '\n';
    const auto exps = graded_lex_exponents(p.d, p.degree_n);
    for (std::size_t t = 0; t < exps.size(); ++t) {
        for (int e : exps[t]) os << e << ' ';
        os << (p.coeffs[t] > 0 ? "+1" : "-1") << '\n';
    }
    return os.str();
}

BernoulliPolyMulti deserialize_multi(const std::string& text) {
    std::istringstream is(text);
    BernoulliPolyMulti p;
    if (!(is >> p.d >> p.degree_n) || p.d < 1 || p.degree_n < 0) {
        throw std::invalid_argument("deserialize_multi: bad header");
    }
    const auto exps = graded_lex_exponents(p.d, p.degree_n);
    p.coeffs.resize(exps.size());
    for (std::size_t t = 0; t < exps.size(); ++t) {
        Exponent e(static_cast<std::size_t>(p.d));
        for (auto& ei : e) {
            if (!(is >> ei)) throw std::invalid_argument("deserialize_multi: truncated");
        }
        if (e != exps[t]) throw std::invalid_argument("deserialize_multi: exponent order");
        int sign;
        if (!(is >> sign) || (sign != 1 && sign != -1)) {
            throw std::invalid_argument("deserialize_multi: bad sign");
        }
        p.coeffs[t] = sign;
    }
    return p;
}

}  // namespace crl
