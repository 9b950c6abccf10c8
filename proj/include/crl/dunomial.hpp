#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crl/atom.hpp"
#include "crl/poly.hpp"

namespace crl {

// Two-term relation x^alpha + sign * x^beta = 0 between distinct monomials.
struct Dunomial {
    Exponent alpha;
    Exponent beta;
    int sign = -1;  // -1 encodes x^alpha - x^beta, +1 encodes x^alpha + x^beta

    bool operator==(const Dunomial&) const = default;
};

// Point with exact Gaussian-rational coordinates (the oracle tier).
struct ExactPoint {
    std::vector<GaussQ> coords;
};

// order |D| = sum_i |alpha_i - beta_i|
int dunomial_order(const Dunomial& d);
// degree = max(|alpha|_1, |beta|_1)
int dunomial_degree(const Dunomial& d);
// subtract the componentwise minimum: no variable on both sides afterwards
Dunomial reduce(const Dunomial& d);
bool is_reduced(const Dunomial& d);

// Every unordered exponent pair {alpha, beta}, alpha != beta, both of total
// degree <= n, with both signs; canonical orientation alpha > beta in
// graded-lex. Count is 2*C(M, 2) with M = C(n+d, d).
std::vector<Dunomial> enumerate_dunomials(int d, int n);

// All reduced dunomials of order exactly r: one per difference vector
// delta = alpha - beta with |delta|_1 = r, modulo the swap symmetry
// (alpha, beta) <-> (beta, alpha), with both signs.
std::vector<Dunomial> enumerate_reduced_by_order(int d, int r);

// |x^alpha + sign*x^beta| <= tol * max(|x^alpha|, |x^beta|), monomials
// handled in log-space so high orders never overflow.
bool satisfied_numeric(const Dunomial& d, const ComplexPoint& x, double tol = 1e-9);
bool satisfied_exact(const Dunomial& d, const ExactPoint& x);

// r(x): minimal order among dunomials of degree <= n_cap vanishing at x;
// nullopt when none within the cap (a lower bound on the true r(x)).
// All coordinates must be nonzero.
std::optional<int> r_of_x_exact(const ExactPoint& x, int n_cap);
std::optional<int> r_of_x_numeric(const ComplexPoint& x, int n_cap, double tol = 1e-9);

// R_n(x): dunomials of degree <= n satisfied by x, counted per canonical
// difference vector with a closed-form pair multiplicity.
std::uint64_t count_satisfied_exact(const ExactPoint& x, int n);
std::uint64_t count_satisfied_numeric(const ComplexPoint& x, int n, double tol = 1e-9);

// all delta in Z^d with |delta|_1 = r and first nonzero component positive
std::vector<Exponent> canonical_deltas_of_order(int d, int r);

}  // namespace crl
