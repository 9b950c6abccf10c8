#include "crl/atom.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace crl {

NFElem NFElem::operator+(const NFElem& o) const {
    NFElem r;
    r.c.resize(std::max(c.size(), o.c.size()), mpq_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

NFElem NFElem::operator-(const NFElem& o) const {
    NFElem r;
    r.c.resize(std::max(c.size(), o.c.size()), mpq_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

bool NFElem::operator<(const NFElem& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (int cc = cmp(c[i], o.c[i])) return cc < 0;
    }
    return false;
}

void NFElem::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::size_t AtomVector::size() const {
    switch (mode) {
        case AtomMode::Integer: return ints.size();
        case AtomMode::GaussianRational: return gauss.size();
        case AtomMode::NumberField: return residues.size();
    }
    return 0;
}

AtomVector AtomVector::integers(std::vector<mpz_class> v) {
    AtomVector a;
    a.mode = AtomMode::Integer;
    a.ints = std::move(v);
    return a;
}

AtomVector AtomVector::gaussians(std::vector<GaussQ> v) {
    AtomVector a;
    a.mode = AtomMode::GaussianRational;
    a.gauss = std::move(v);
    return a;
}

AtomVector AtomVector::number_field(IntPoly modulus, std::vector<NFElem> v) {
    if (modulus.degree() < 1) {
        throw std::invalid_argument("AtomVector: modulus must be nonconstant");
    }
    AtomVector a;
    a.mode = AtomMode::NumberField;
    a.modulus = std::move(modulus);
    a.residues = std::move(v);
    return a;
}

namespace {

template <typename T>
mpz_class dp_count(const std::vector<T>& v, const T& zero) {
    std::map<T, mpz_class> cur;
    cur[zero] = 1;
    for (const T& x : v) {
        std::map<T, mpz_class> next;
        for (const auto& [s, cnt] : cur) {
            next[s + x] += cnt;
            next[s - x] += cnt;
        }
        cur.swap(next);
    }
    auto it = cur.find(zero);
    return it == cur.end() ? mpz_class(0) : it->second;
}

template <typename T>
mpz_class enum_count(const std::vector<T>& v, const T& zero) {
    if (v.size() > 30) {
        throw std::invalid_argument("enumeration mode: m must be <= 30");
    }
    mpz_class hits = 0;
    T sum = zero;
    for (const T& x : v) sum = sum + x;  // start at all-plus
    std::vector<int> signs(v.size(), 1);
    if (sum == zero) ++hits;
    // Gray-code walk: flip one sign per step
    const std::uint64_t total = 1ull << v.size();
    for (std::uint64_t k = 1; k < total; ++k) {
        const unsigned bit = static_cast<unsigned>(__builtin_ctzll(k));
        if (signs[bit] > 0) {
            sum = sum - v[bit] - v[bit];
            signs[bit] = -1;
        } else {
            sum = sum + v[bit] + v[bit];
            signs[bit] = 1;
        }
        if (sum == zero) ++hits;
    }
    return hits;
}

// int64 fast path for bounded integer vectors
mpz_class enum_count_i64(const std::vector<long long>& v) {
    long long sum = 0;
    for (long long x : v) sum += x;
    std::vector<int> signs(v.size(), 1);
    std::uint64_t hits = sum == 0 ? 1 : 0;
    const std::uint64_t total = 1ull << v.size();
    for (std::uint64_t k = 1; k < total; ++k) {
        const unsigned bit = static_cast<unsigned>(__builtin_ctzll(k));
        if (signs[bit] > 0) {
            sum -= 2 * v[bit];
            signs[bit] = -1;
        } else {
            sum += 2 * v[bit];
            signs[bit] = 1;
        }
        if (sum == 0) ++hits;
    }
    return mpz_class(static_cast<unsigned long>(hits));
}

bool fits_i64(const std::vector<mpz_class>& v, std::vector<long long>& out) {
    long long bound = 0;
    out.clear();
    for (const auto& x : v) {
        if (!x.fits_slong_p()) return false;
        const long long xi = x.get_si();
        if (std::llabs(xi) > (1ll << 40)) return false;
        bound += std::llabs(xi);
        if (bound > (1ll << 60)) return false;
        out.push_back(xi);
    }
    return true;
}

// cheap reducibility screens: square factor, root at 0 or ±1
bool modulus_suspect(const IntPoly& f) {
    if (f.eval(mpz_class(0)) == 0 || f.eval(mpz_class(1)) == 0 ||
        f.eval(mpz_class(-1)) == 0) {
        return true;
    }
    std::vector<mpz_class> dc(static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        dc[i - 1] = f.coeffs()[i] * static_cast<long>(i);
    }
    return gcd_int(f, IntPoly(std::move(dc))).degree() >= 1;
}

}  // namespace

mpz_class atom_zero_count_dp(const AtomVector& xi) {
    switch (xi.mode) {
        case AtomMode::Integer: return dp_count(xi.ints, mpz_class(0));
        case AtomMode::GaussianRational: return dp_count(xi.gauss, GaussQ{});
        case AtomMode::NumberField: return dp_count(xi.residues, NFElem{});
    }
    return 0;
}

mpz_class atom_zero_count_enum(const AtomVector& xi) {
    if (xi.size() > 30) {
        throw std::invalid_argument("enumeration mode: m must be <= 30");
    }
    if (xi.mode == AtomMode::Integer) {
        std::vector<long long> small;
        if (fits_i64(xi.ints, small)) return enum_count_i64(small);
    }
    switch (xi.mode) {
        case AtomMode::Integer: return enum_count(xi.ints, mpz_class(0));
        case AtomMode::GaussianRational: return enum_count(xi.gauss, GaussQ{});
        case AtomMode::NumberField: return enum_count(xi.residues, NFElem{});
    }
    return 0;
}

AtomResult atom_probability(const AtomVector& xi) {
    if (xi.size() == 0) throw std::invalid_argument("atom_probability: empty vector");
    AtomResult r;
    r.m = static_cast<int>(xi.size());
    r.zero_count = atom_zero_count_dp(xi);
    mpz_class denom = 1;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(),
                 static_cast<unsigned long>(r.m));
    r.probability = mpq_class(r.zero_count, denom);
    r.probability.canonicalize();
    if (xi.mode == AtomMode::NumberField) r.modulus_flag = modulus_suspect(xi.modulus);
    return r;
}

mpq_class walk_return_prob(unsigned long m) {
    if (m % 2 != 0) return 0;
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), m, m / 2);
    mpz_class denom = 1;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), m);
    mpq_class q(binom, denom);
    q.canonicalize();
    return q;
}

unsigned long couples_count(const AtomVector& xi) {
    const std::size_t m = xi.size();
    auto collide = [&](std::size_t j, std::size_t k) {
        switch (xi.mode) {
            case AtomMode::Integer:
                return xi.ints[j] == xi.ints[k] || xi.ints[j] == -xi.ints[k];
            case AtomMode::GaussianRational:
                return xi.gauss[j] == xi.gauss[k] || xi.gauss[j] == -xi.gauss[k];
            case AtomMode::NumberField:
                return xi.residues[j] == xi.residues[k] ||
                       xi.residues[j] == -xi.residues[k];
        }
        return false;
    };
    unsigned long count = 0;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            if (collide(j, k)) ++count;
        }
    }
    return count;
}

AtomVector power_vector(const IntPoly& x_minpoly, int m) {
    if (x_minpoly.degree() < 1) {
        throw std::invalid_argument("power_vector: modulus must be nonconstant");
    }
    if (m < 1) throw std::invalid_argument("power_vector: m must be >= 1");
    const int deg = x_minpoly.degree();
    const mpq_class lead(x_minpoly.leading());
    std::vector<NFElem> residues;
    residues.reserve(static_cast<std::size_t>(m));
    NFElem cur;
    cur.c = {mpq_class(1)};
    for (int i = 0; i < m; ++i) {
        residues.push_back(cur);
        // cur *= x, reduce mod x_minpoly
        cur.c.insert(cur.c.begin(), mpq_class(0));
        if (static_cast<int>(cur.c.size()) > deg) {
            const mpq_class top = cur.c.back() / lead;
            cur.c.pop_back();
            for (int j = 0; j < deg; ++j) {
                cur.c[static_cast<std::size_t>(j)] -=
                    top * x_minpoly.coeffs()[static_cast<std::size_t>(j)];
            }
        }
        cur.trim();
    }
    return AtomVector::number_field(x_minpoly, std::move(residues));
}

BoundReport bound_report(const AtomVector& xi) {
    BoundReport r;
    r.atom = atom_probability(xi);
    const double m = static_cast<double>(r.atom.m);
    r.prob = r.atom.probability.get_d();
    r.erdos_ratio = r.prob * std::sqrt(m);
    r.couples = couples_count(xi);
    r.halasz_ratio = r.prob * std::pow(m, 2.5) / static_cast<double>(r.couples);
    // ss_ratio only when all entries are pairwise distinct
    bool distinct = true;
    auto equal = [&](std::size_t j, std::size_t k) {
        switch (xi.mode) {
            case AtomMode::Integer: return xi.ints[j] == xi.ints[k];
            case AtomMode::GaussianRational: return xi.gauss[j] == xi.gauss[k];
            case AtomMode::NumberField: return xi.residues[j] == xi.residues[k];
        }
        return false;
    };
    for (std::size_t j = 0; j < xi.size() && distinct; ++j) {
        for (std::size_t k = j + 1; k < xi.size(); ++k) {
            if (equal(j, k)) { distinct = false; break; }
        }
    }
    if (distinct) r.ss_ratio = r.prob * std::pow(m, 1.5);
    return r;
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["m"] = atom.m;
    j["zero_count"] = atom.zero_count.get_str();
    j["probability"] = atom.probability.get_str();
    j["prob"] = prob;
    j["erdos_ratio"] = erdos_ratio;
    if (ss_ratio) j["ss_ratio"] = *ss_ratio;
    j["halasz_ratio"] = halasz_ratio;
    j["couples"] = couples;
    if (atom.modulus_flag) j["modulus_flag"] = true;
    return j.dump(2);
}

}  // namespace crl
