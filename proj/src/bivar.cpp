#include "crl/bivar.hpp"

#include <stdexcept>

namespace crl {

int BivarIntPoly::degree_x() const {
    int d = -1;
    for (const auto& ck : c_) d = std::max(d, ck.degree());
    return d;
}

int BivarIntPoly::total_degree() const {
    int d = -1;
    for (int k = 0; k <= degree_y(); ++k) {
        if (!c_[static_cast<std::size_t>(k)].is_zero()) {
            d = std::max(d, k + c_[static_cast<std::size_t>(k)].degree());
        }
    }
    return d;
}

BivarIntPoly to_bivar(const BernoulliPolyMulti& p) {
    if (p.d != 2) throw std::invalid_argument("to_bivar: requires d = 2");
    const auto exps = graded_lex_exponents(2, p.degree_n);
    std::vector<std::vector<mpz_class>> cy(static_cast<std::size_t>(p.degree_n) + 1);
    for (auto& row : cy) row.assign(static_cast<std::size_t>(p.degree_n) + 1, mpz_class(0));
    for (std::size_t t = 0; t < exps.size(); ++t) {
        cy[static_cast<std::size_t>(exps[t][1])][static_cast<std::size_t>(exps[t][0])] =
            p.coeffs[t];
    }
    std::vector<IntPoly> coeffs;
    coeffs.reserve(cy.size());
    for (auto& row : cy) coeffs.emplace_back(std::move(row));
    return BivarIntPoly(std::move(coeffs));
}

std::vector<Complex> fiber_coeffs(const BivarIntPoly& p, Complex x0) {
    std::vector<Complex> out(p.coeffs_y().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        Complex acc = 0.0;
        const auto& cs = p.coeffs_y()[k].coeffs();
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
            acc = acc * x0 + it->get_d();
        }
        out[k] = acc;
    }
    while (out.size() > 1 && std::abs(out.back()) == 0.0) out.pop_back();
    return out;
}

IntPoly eliminate_y(const BivarIntPoly& P, const BivarIntPoly& Q) {
    if (P.is_zero() || Q.is_zero() || P.degree_y() < 1 || Q.degree_y() < 1) {
        throw std::invalid_argument("eliminate_y: inputs must be nonzero with positive y-degree");
    }
    const int m = P.degree_y(), n = Q.degree_y();
    const int size = m + n;
    std::vector<std::vector<IntPoly>> a(
        static_cast<std::size_t>(size),
        std::vector<IntPoly>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j <= m; ++j) a[r][r + j] = P.coeffs_y()[static_cast<std::size_t>(m - j)];
    }
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = Q.coeffs_y()[static_cast<std::size_t>(n - j)];
    }
    int sign = 1;
    IntPoly prev = IntPoly::constant(1);
    for (int k = 0; k < size - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i) {
                if (!a[i][k].is_zero()) { swap_row = i; break; }
            }
            if (swap_row < 0) return {};
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                auto q = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
                if (!q) throw std::logic_error("eliminate_y: Bareiss division failed");
                a[i][j] = std::move(*q);
            }
            a[i][k] = IntPoly{};
        }
        prev = a[k][k];
    }
    IntPoly det = a[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
    return sign > 0 ? det : -det;
}

PolyMod eliminate_y_mod(const BivarIntPoly& P, const BivarIntPoly& Q,
                        std::uint64_t p) {
    if (P.is_zero() || Q.is_zero() || P.degree_y() < 1 || Q.degree_y() < 1) {
        throw std::invalid_argument("eliminate_y_mod: inputs must be nonzero with positive y-degree");
    }
    const int bound = P.degree_y() * std::max(Q.degree_x(), 0) +
                      Q.degree_y() * std::max(P.degree_x(), 0);
    const std::size_t points = static_cast<std::size_t>(bound) + 1;

    // coefficient tables mod p
    auto reduce = [&](const BivarIntPoly& B) {
        std::vector<PolyMod> out;
        out.reserve(B.coeffs_y().size());
        for (const auto& ck : B.coeffs_y()) out.push_back(reduce_mpz_mod(ck.coeffs(), p));
        return out;
    };
    const auto pc = reduce(P);
    const auto qc = reduce(Q);
    auto eval_mod = [&](const PolyMod& f, std::uint64_t t) {
        std::uint64_t acc = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (mulmod(acc, t, p) + *it) % p;
        return acc;
    };

    std::vector<std::uint64_t> xs, ys;
    for (std::uint64_t t = 0; xs.size() < points; ++t) {
        if (t >= p) throw std::logic_error("eliminate_y_mod: prime too small");
        // leading y-coefficients must not vanish at the sample point
        if (eval_mod(pc.back(), t) == 0 || eval_mod(qc.back(), t) == 0) continue;
        PolyMod fy(pc.size()), gy(qc.size());
        for (std::size_t k = 0; k < pc.size(); ++k) fy[k] = eval_mod(pc[k], t);
        for (std::size_t k = 0; k < qc.size(); ++k) gy[k] = eval_mod(qc[k], t);
        xs.push_back(t);
        ys.push_back(resultant_mod(std::move(fy), std::move(gy), p));
    }

    // Lagrange interpolation via the Newton form
    std::vector<std::uint64_t> coef(points);  // divided differences
    for (std::size_t i = 0; i < points; ++i) {
        std::uint64_t v = ys[i];
        for (std::size_t j = 0; j < i; ++j) {
            const std::uint64_t dx = (xs[i] + p - xs[j]) % p;
            v = mulmod((v + p - coef[j]) % p, invmod(dx, p), p);
            ys[i] = v;
        }
        coef[i] = v;
    }
    // expand Newton form to the monomial basis
    PolyMod acc;  // result
    PolyMod basis = {1};
    for (std::size_t i = 0; i < points; ++i) {
        if (acc.size() < basis.size()) acc.resize(basis.size(), 0);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            acc[j] = (acc[j] + mulmod(coef[i], basis[j], p)) % p;
        }
        if (i + 1 < points) {
            // basis *= (x - xs[i])
            basis.push_back(0);
            for (std::size_t j = basis.size() - 1; j > 0; --j) {
                basis[j] = (basis[j - 1] + mulmod(basis[j], p - xs[i] % p, p)) % p;
            }
            basis[0] = mulmod(basis[0], p - xs[i] % p, p);
        }
    }
    return trim_mod(std::move(acc));
}

}  // namespace crl
