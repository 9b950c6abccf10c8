#pragma once

#include <vector>

#include "crl/intpoly.hpp"
#include "crl/poly.hpp"

namespace crl {

// Complex roots by companion-matrix eigenvalues plus one Newton refinement
// pass. Witness-quality numerics only; decisions in d=1 are always exact.
std::vector<Complex> numeric_roots(const IntPoly& p);
std::vector<Complex> numeric_roots(const std::vector<Complex>& coeffs);

}  // namespace crl
