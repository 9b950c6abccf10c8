#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "crl/rng.hpp"

namespace crl {

using Complex = std::complex<double>;

// A ±1 coefficient sign.
using Sign = int;  // always -1 or +1

// A point of C^d.
struct ComplexPoint {
    std::vector<Complex> coords;
};

// Univariate random polynomial with i.i.d. ±1 coefficients,
// coeffs[i] = coefficient of x^i, degree n = coeffs.size() - 1.
struct BernoulliPolyUni {
    std::vector<Sign> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Exponent vector in Z_+^d.
using Exponent = std::vector<int>;

// d-variate random polynomial of total degree <= n: one ±1 sign per
// exponent vector with |j|_1 <= n, stored in graded-lex order.
struct BernoulliPolyMulti {
    int d = 1;
    int degree_n = 0;
    std::vector<Sign> coeffs;  // parallel to exponents(d, degree_n)

    std::size_t term_count() const { return coeffs.size(); }
};

// All exponent vectors j in Z_+^d with |j|_1 <= n, in graded-lex order:
// ascending total degree, then lexicographically ascending on (j_1,...,j_d).
std::vector<Exponent> graded_lex_exponents(int d, int n);

// Number of such vectors: C(n+d, d).
std::uint64_t exponent_count(int d, int n);

BernoulliPolyUni sample_uni(int n, Seed seed);
BernoulliPolyMulti sample_multi(int d, int n, Seed seed);  // rejects d = 0

Complex eval(const BernoulliPolyUni& p, Complex x);
Complex eval(const BernoulliPolyMulti& p, const ComplexPoint& x);

// (P(1), P(-1)) as exact integers; the fast pre-filter for common roots
// at ±1, which dominate the d=1 common-root event.
std::pair<long long, long long> eval_at_pm1(const BernoulliPolyUni& p);

// Univariate shorthand: "+-+" <-> coefficients [+1,-1,+1].
std::string to_sign_string(const BernoulliPolyUni& p);
BernoulliPolyUni from_sign_string(const std::string& s);  // rejects bad chars

// Canonical text form: first line "d n", then one "j_1 ... j_d sign" line
// per term in graded-lex order.
std::string serialize(const BernoulliPolyMulti& p);
BernoulliPolyMulti deserialize_multi(const std::string& text);

}  // namespace crl
