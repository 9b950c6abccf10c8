#include "crl/roots.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace crl {

namespace {

Complex horner(const std::vector<Complex>& c, Complex x) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex horner_deriv(const std::vector<Complex>& c, Complex x) {
    Complex acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) {
        acc = acc * x + static_cast<double>(i) * c[i];
    }
    return acc;
}

}  // namespace

std::vector<Complex> numeric_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    const std::size_t n = c.size() - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(n),
                                                static_cast<long>(n));
    for (std::size_t i = 0; i + 1 < n; ++i) m(static_cast<long>(i) + 1, static_cast<long>(i)) = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        m(static_cast<long>(i), static_cast<long>(n) - 1) = -c[i] / c[n];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("numeric_roots: eigensolver failed");
    }
    std::vector<Complex> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex r = solver.eigenvalues()(static_cast<long>(i));
        const Complex dp = horner_deriv(c, r);
        if (std::abs(dp) > 0.0) r -= horner(c, r) / dp;
        roots[i] = r;
    }
    return roots;
}

std::vector<Complex> numeric_roots(const IntPoly& p) {
    std::vector<Complex> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].get_d();
    return numeric_roots(c);
}

}  // namespace crl
