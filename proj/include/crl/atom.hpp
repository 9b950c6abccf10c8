#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "crl/intpoly.hpp"

namespace crl {

// Exact Gaussian rational a + b*i.
struct GaussQ {
    mpq_class re, im;

    GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
    GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
    GaussQ operator-() const { return {-re, -im}; }
    GaussQ operator*(const GaussQ& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussQ operator/(const GaussQ& o) const {
        const mpq_class n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
    bool operator<(const GaussQ& o) const {
        if (int c = cmp(re, o.re)) return c < 0;
        return cmp(im, o.im) < 0;
    }
};

// Residue in Q[x]/(modulus), canonical trimmed coefficient vector.
struct NFElem {
    std::vector<mpq_class> c;

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator-() const;
    bool operator==(const NFElem& o) const { return c == o.c; }
    bool operator<(const NFElem& o) const;
    void trim();
};

enum class AtomMode { Integer, GaussianRational, NumberField };

// Vector of exact values over which P(sum eps_i xi_i = 0) is computed.
struct AtomVector {
    AtomMode mode = AtomMode::Integer;
    std::vector<mpz_class> ints;
    std::vector<GaussQ> gauss;
    IntPoly modulus;  // NumberField mode only, nonconstant
    std::vector<NFElem> residues;

    std::size_t size() const;

    static AtomVector integers(std::vector<mpz_class> v);
    static AtomVector gaussians(std::vector<GaussQ> v);
    static AtomVector number_field(IntPoly modulus, std::vector<NFElem> v);
};

struct AtomResult {
    mpq_class probability;  // zero_count / 2^m
    mpz_class zero_count;
    int m = 0;
    // set when a NumberField modulus fails the cheap irreducibility screens
    bool modulus_flag = false;
};

// Exact count of sign patterns with zero signed sum, via subset-sum DP over
// exact keys. No floating arithmetic anywhere on this path.
AtomResult atom_probability(const AtomVector& xi);

// Independent plain-enumeration count (2^m walk, m <= 30).
mpz_class atom_zero_count_enum(const AtomVector& xi);
mpz_class atom_zero_count_dp(const AtomVector& xi);

// C(m, m/2) / 2^m for even m, 0 for odd m.
mpq_class walk_return_prob(unsigned long m);

// Ordered pairs (j, k), including j = k, with xi_j = ±xi_k.
unsigned long couples_count(const AtomVector& xi);

// (1, x, x^2, ..., x^(m-1)) reduced mod x_minpoly; rejects constant modulus.
AtomVector power_vector(const IntPoly& x_minpoly, int m);

struct BoundReport {
    AtomResult atom;
    double prob = 0;
    double erdos_ratio = 0;                // prob * m^(1/2)
    std::optional<double> ss_ratio;        // prob * m^(3/2), distinct entries only
    double halasz_ratio = 0;               // prob * m^(5/2) / R
    unsigned long couples = 0;
    std::string to_json() const;
};

BoundReport bound_report(const AtomVector& xi);

}  // namespace crl
