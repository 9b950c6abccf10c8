#pragma once

#include <cstdint>
#include <vector>

#include "crl/intpoly.hpp"
#include "crl/modular.hpp"
#include "crl/poly.hpp"

namespace crl {

// Polynomial in Z[x][y]: coeffs_y[k] is the IntPoly-in-x coefficient of y^k.
class BivarIntPoly {
public:
    BivarIntPoly() = default;
    explicit BivarIntPoly(std::vector<IntPoly> coeffs_y)
        : c_(std::move(coeffs_y)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int degree_y() const { return static_cast<int>(c_.size()) - 1; }
    int degree_x() const;
    int total_degree() const;
    const std::vector<IntPoly>& coeffs_y() const { return c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<IntPoly> c_;
};

// View of a d=2 Bernoulli polynomial with x = x_1, y = x_2.
BivarIntPoly to_bivar(const BernoulliPolyMulti& p);

// Fiber polynomial P(x0, y) in Z[y] evaluated at a rational is not needed;
// for numeric lifting we use complex fibers.
std::vector<Complex> fiber_coeffs(const BivarIntPoly& p, Complex x0);

// Res_y(P, Q) in Z[x], exact (Bareiss fraction-free elimination on the
// Sylvester matrix over Z[x], P-rows first). Rejects zero or y-free input.
IntPoly eliminate_y(const BivarIntPoly& P, const BivarIntPoly& Q);

// Res_y(P, Q) mod p, by evaluation at x = 0,1,2,... and Lagrange
// interpolation. Fast path for the Monte Carlo campaigns; agrees with
// eliminate_y reduced mod p.
PolyMod eliminate_y_mod(const BivarIntPoly& P, const BivarIntPoly& Q,
                        std::uint64_t p);

}  // namespace crl
