#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "crl/poly.hpp"

namespace crl {

// Dense univariate polynomial over Z, coeffs[i] = coefficient of x^i.
// The zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero. Content is never normalized implicitly.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(mpz_class v);
    // x^k with coefficient v
    static IntPoly monomial(mpz_class v, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    const mpz_class& leading() const { return c_.back(); }

    bool operator==(const IntPoly&) const = default;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const mpz_class& s) const;
    IntPoly shifted(std::size_t k) const;  // multiply by x^k

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    // gcd of |coefficients|; content of the zero polynomial is 0.
    mpz_class content() const;
    // content-free copy with positive leading coefficient
    IntPoly primitive_part() const;

    // Exact quotient if divisor | *this in Z[x], else nullopt.
    std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

    // Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r, deg r < deg g.
    IntPoly pseudo_rem(const IntPoly& g) const;

    std::string to_string() const;               // space-separated, lowest first
    static IntPoly from_string(const std::string& s);

private:
    void trim();
    std::vector<mpz_class> c_;
};

IntPoly to_int_poly(const BernoulliPolyUni& p);

// Primitive gcd with positive leading coefficient; rejects gcd(0, 0).
// Implementation is modular with exact trial-division certification.
IntPoly gcd_int(const IntPoly& f, const IntPoly& g);

// Subresultant polynomial-remainder-sequence gcd; the reference oracle for
// gcd_int (identical output contract, no modular shortcut).
IntPoly gcd_subresultant(const IntPoly& f, const IntPoly& g);

// Exact Sylvester resultant (f-rows first), computed by CRT over fixed
// 62-bit primes up to the Hadamard bound. Rejects zero inputs.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// Independent oracle: Bareiss fraction-free determinant of the Sylvester
// matrix. Same sign convention as resultant().
mpz_class resultant_sylvester_bareiss(const IntPoly& f, const IntPoly& g);

struct ResultantVerdict {
    enum class Tag { NonzeroCertified, ZeroCertified, Undecided };
    Tag tag = Tag::Undecided;
    // prime with nonzero modular resultant (NonzeroCertified)
    std::optional<std::uint64_t> witness_prime;
    // exact value (ZeroCertified)
    std::optional<mpz_class> exact_value;

    std::string to_json() const;
};

// Cheap one-sided zero test: NonzeroCertified on the first prime with
// Res(f,g) != 0 mod p, Undecided after `prime_budget` primes.
ResultantVerdict modular_resultant_filter(const IntPoly& f, const IntPoly& g,
                                          int prime_budget);

}  // namespace crl
