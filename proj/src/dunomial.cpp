#include "crl/dunomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crl {

namespace {

Exponent delta_of(const Dunomial& d) {
    Exponent delta(d.alpha.size());
    for (std::size_t i = 0; i < d.alpha.size(); ++i) delta[i] = d.alpha[i] - d.beta[i];
    return delta;
}

int pos_sum(const Exponent& delta) {
    int s = 0;
    for (int v : delta) s += std::max(v, 0);
    return s;
}

int neg_sum(const Exponent& delta) {
    int s = 0;
    for (int v : delta) s += std::max(-v, 0);
    return s;
}

bool canonical(const Exponent& delta) {
    for (int v : delta) {
        if (v != 0) return v > 0;
    }
    return false;  // zero vector is not a dunomial difference
}

void check_nonzero(std::size_t dim, bool any_zero) {
    if (dim == 0) throw std::invalid_argument("dunomial: empty point");
    if (any_zero) throw std::invalid_argument("dunomial: zero coordinate rejected");
}

// exact x^delta over Gaussian rationals
GaussQ power_delta(const ExactPoint& x, const Exponent& delta) {
    GaussQ acc{mpq_class(1), mpq_class(0)};
    for (std::size_t i = 0; i < delta.size(); ++i) {
        const int e = delta[i];
        if (e == 0) continue;
        GaussQ base = e > 0 ? x.coords[i]
                            : GaussQ{mpq_class(1), mpq_class(0)} / x.coords[i];
        for (int k = 0; k < std::abs(e); ++k) acc = acc * base;
    }
    return acc;
}

// log-space ratio x^delta = exp(dl + i*dtheta)
void log_ratio(const ComplexPoint& x, const Exponent& delta, double& dl,
               double& dtheta) {
    dl = 0;
    dtheta = 0;
    for (std::size_t i = 0; i < delta.size(); ++i) {
        if (delta[i] == 0) continue;
        dl += delta[i] * std::log(std::abs(x.coords[i]));
        dtheta += delta[i] * std::arg(x.coords[i]);
    }
}

bool delta_satisfied_numeric(const ComplexPoint& x, const Exponent& delta,
                             int sign, double tol) {
    double dl = 0, dtheta = 0;
    log_ratio(x, delta, dl, dtheta);
    if (!(std::abs(dl) <= 0.1)) return false;  // |ratio| far from 1; also inf
    const Complex ratio = std::exp(dl) * Complex(std::cos(dtheta), std::sin(dtheta));
    const double scale = std::max(std::abs(ratio), 1.0);
    return std::abs(ratio + static_cast<double>(sign)) <= tol * scale;
}

bool delta_satisfied_exact(const ExactPoint& x, const Exponent& delta, int sign) {
    const GaussQ v = power_delta(x, delta);
    return v == GaussQ{mpq_class(-sign), mpq_class(0)};
}

template <typename Fn>
void for_each_delta(int d, int lo, int hi, Fn&& fn) {
    Exponent delta(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == d) {
            if (canonical(delta)) fn(delta);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            delta[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
        }
        delta[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0);
}

}  // namespace

int dunomial_order(const Dunomial& d) {
    int s = 0;
    for (std::size_t i = 0; i < d.alpha.size(); ++i) s += std::abs(d.alpha[i] - d.beta[i]);
    return s;
}

int dunomial_degree(const Dunomial& d) {
    int a = 0, b = 0;
    for (int v : d.alpha) a += v;
    for (int v : d.beta) b += v;
    return std::max(a, b);
}

Dunomial reduce(const Dunomial& d) {
    Dunomial r = d;
    for (std::size_t i = 0; i < r.alpha.size(); ++i) {
        const int m = std::min(r.alpha[i], r.beta[i]);
        r.alpha[i] -= m;
        r.beta[i] -= m;
    }
    return r;
}

bool is_reduced(const Dunomial& d) {
    for (std::size_t i = 0; i < d.alpha.size(); ++i) {
        if (std::min(d.alpha[i], d.beta[i]) != 0) return false;
    }
    return true;
}

std::vector<Dunomial> enumerate_dunomials(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("enumerate_dunomials: d, n >= 1");
    const auto exps = graded_lex_exponents(d, n);
    std::vector<Dunomial> out;
    out.reserve(exps.size() * (exps.size() - 1));
    for (std::size_t i = 0; i < exps.size(); ++i) {
        for (std::size_t j = i + 1; j < exps.size(); ++j) {
            // alpha is the graded-lex-larger exponent
            out.push_back({exps[j], exps[i], -1});
            out.push_back({exps[j], exps[i], +1});
        }
    }
    return out;
}

std::vector<Exponent> canonical_deltas_of_order(int d, int r) {
    std::vector<Exponent> out;
    for_each_delta(d, -r, r, [&](const Exponent& delta) {
        if (pos_sum(delta) + neg_sum(delta) == r) out.push_back(delta);
    });
    return out;
}

std::vector<Dunomial> enumerate_reduced_by_order(int d, int r) {
    if (d < 1 || r < 1) throw std::invalid_argument("enumerate_reduced_by_order: d, r >= 1");
    std::vector<Dunomial> out;
    for (const Exponent& delta : canonical_deltas_of_order(d, r)) {
        Exponent alpha(delta.size()), beta(delta.size());
        for (std::size_t i = 0; i < delta.size(); ++i) {
            alpha[i] = std::max(delta[i], 0);
            beta[i] = std::max(-delta[i], 0);
        }
        out.push_back({alpha, beta, -1});
        out.push_back({alpha, beta, +1});
    }
    return out;
}

bool satisfied_numeric(const Dunomial& d, const ComplexPoint& x, double tol) {
    return delta_satisfied_numeric(x, delta_of(d), d.sign, tol);
}

bool satisfied_exact(const Dunomial& d, const ExactPoint& x) {
    for (const auto& c : x.coords) {
        if (c.is_zero()) throw std::invalid_argument("satisfied_exact: zero coordinate");
    }
    return delta_satisfied_exact(x, delta_of(d), d.sign);
}

namespace {

template <typename SatisfiedFn>
std::optional<int> r_of_x_impl(int d, int n_cap, SatisfiedFn&& satisfied) {
    for (int r = 1; r <= 2 * n_cap; ++r) {
        for (const Exponent& delta : canonical_deltas_of_order(d, r)) {
            if (std::max(pos_sum(delta), neg_sum(delta)) > n_cap) continue;
            if (satisfied(delta, -1) || satisfied(delta, +1)) return r;
        }
    }
    return std::nullopt;
}

template <typename SatisfiedFn>
std::uint64_t count_satisfied_impl(int d, int n, SatisfiedFn&& satisfied) {
    std::uint64_t count = 0;
    for_each_delta(d, -n, n, [&](const Exponent& delta) {
        const int deg = std::max(pos_sum(delta), neg_sum(delta));
        if (deg > n) return;
        // dunomials with difference ±delta: one per shift gamma >= 0 with
        // |gamma|_1 <= n - deg, for each satisfied sign
        const std::uint64_t mult = exponent_count(d, n - deg);
        if (satisfied(delta, -1)) count += mult;
        if (satisfied(delta, +1)) count += mult;
    });
    return count;
}

}  // namespace

std::optional<int> r_of_x_exact(const ExactPoint& x, int n_cap) {
    check_nonzero(x.coords.size(), std::any_of(x.coords.begin(), x.coords.end(),
                                               [](const GaussQ& c) { return c.is_zero(); }));
    const int d = static_cast<int>(x.coords.size());
    return r_of_x_impl(d, n_cap, [&](const Exponent& delta, int sign) {
        return delta_satisfied_exact(x, delta, sign);
    });
}

std::optional<int> r_of_x_numeric(const ComplexPoint& x, int n_cap, double tol) {
    check_nonzero(x.coords.size(), std::any_of(x.coords.begin(), x.coords.end(),
                                               [](Complex c) { return std::abs(c) == 0.0; }));
    const int d = static_cast<int>(x.coords.size());
    return r_of_x_impl(d, n_cap, [&](const Exponent& delta, int sign) {
        return delta_satisfied_numeric(x, delta, sign, tol);
    });
}

std::uint64_t count_satisfied_exact(const ExactPoint& x, int n) {
    check_nonzero(x.coords.size(), std::any_of(x.coords.begin(), x.coords.end(),
                                               [](const GaussQ& c) { return c.is_zero(); }));
    const int d = static_cast<int>(x.coords.size());
    return count_satisfied_impl(d, n, [&](const Exponent& delta, int sign) {
        return delta_satisfied_exact(x, delta, sign);
    });
}

std::uint64_t count_satisfied_numeric(const ComplexPoint& x, int n, double tol) {
    check_nonzero(x.coords.size(), std::any_of(x.coords.begin(), x.coords.end(),
                                               [](Complex c) { return std::abs(c) == 0.0; }));
    const int d = static_cast<int>(x.coords.size());
    return count_satisfied_impl(d, n, [&](const Exponent& delta, int sign) {
        return delta_satisfied_numeric(x, delta, sign, tol);
    });
}

}  // namespace crl
