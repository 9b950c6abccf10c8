#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crl/dunomial.hpp"
#include "crl/intpoly.hpp"
#include "crl/poly.hpp"

namespace crl {

// Monic integer polynomial whose roots can occur as roots of ±1-coefficient
// polynomials: every complex root lies in the closed annulus [1/2, 2].
struct CandidatePoly {
    IntPoly poly;
    int algebraic_degree = 1;
};

struct RootClass {
    enum class Tag { RationalPM1, LowDegree, Higher };
    Tag tag = Tag::Higher;
    int which = 0;  // RationalPM1: the root, +1 or -1
    std::optional<CandidatePoly> candidate;
};

struct FactorClass {
    IntPoly factor;
    RootClass cls;
    int multiplicity = 1;
};

// Retain roots inside the annulus 1/2 - eps < |rho| < 2 + eps.
std::vector<Complex> annulus_filter(const std::vector<Complex>& roots,
                                    double eps = 1e-6);

// Degree 1: exactly {x-1, x+1}. Degree 2: all irreducible x^2 - a*x - b with
// |a| <= 4, |b| <= 4 and both roots in the closed annulus, in ascending
// (a, b) order. Only max_algebraic_degree in {1, 2} is supported.
std::vector<CandidatePoly> enumerate_candidates(int max_algebraic_degree);

// Leading exact terms of the d=1 common-root decomposition, with
// m = n + 1 coefficients:
//   I = II = walk_return_prob(m)^2     (both vanish at +1 / at -1)
//   III = -(q_even * q_odd)^2          (all four events; negative)
struct DecompTerms {
    mpq_class term_i;
    mpq_class term_ii;
    mpq_class term_iii;
};
DecompTerms decompose_terms(int n);

// Factor gcd(p, q) into (x -+ 1) and annulus-feasible quadratic candidates by
// exact trial division with multiplicity; a nonconstant unfactored remainder
// is tagged Higher.
std::vector<FactorClass> classify_common_roots_1d(const BernoulliPolyUni& p,
                                                  const BernoulliPolyUni& q);

struct ZoneTag {
    enum class Tag { Z1, Z2, Z3 };
    Tag tag = Tag::Z3;
    int zero_coord_index = -1;          // Z1
    std::optional<Dunomial> witness;    // Z2, minimal order
};

// Z1 if some |x_i| < tol; else Z2 with a minimal-order dunomial witness of
// degree <= n; else Z3.
ZoneTag classify_point(const ComplexPoint& x, int n, double tol = 1e-9);

std::string to_json(const std::vector<FactorClass>& classes);
std::string to_json(const ZoneTag& tag);

}  // namespace crl
