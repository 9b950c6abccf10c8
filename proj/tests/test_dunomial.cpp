#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "crl/dunomial.hpp"
#include "crl/rng.hpp"

using namespace crl;

namespace {

GaussQ gq(long num, long den = 1) { return GaussQ{mpq_class(num, den), 0}; }

ExactPoint pt(std::vector<std::pair<long, long>> coords) {
    ExactPoint p;
    for (auto [n, d] : coords) p.coords.push_back(gq(n, d));
    return p;
}

Dunomial random_dunomial(RandomStream& rs, int d, int max_exp) {
    Dunomial D;
    do {
        D.alpha.assign(d, 0);
        D.beta.assign(d, 0);
        for (int i = 0; i < d; ++i) {
            D.alpha[i] = int(rs.next_u32() % (max_exp + 1));
            D.beta[i] = int(rs.next_u32() % (max_exp + 1));
        }
    } while (D.alpha == D.beta);
    D.sign = rs.next_sign();
    return D;
}

// independent oracle: test every enumerated dunomial one by one
std::uint64_t double_loop_count(const ExactPoint& x, int d, int n) {
    std::uint64_t c = 0;
    for (const auto& D : enumerate_dunomials(d, n))
        if (satisfied_exact(D, x)) ++c;
    return c;
}

}  // namespace

TEST_CASE("order examples") {
    CHECK(dunomial_order(Dunomial{{1, 0}, {0, 1}, -1}) == 2);
    CHECK(dunomial_order(Dunomial{{3, 2}, {1, 2}, -1}) == 2);
}

TEST_CASE("reduce: examples, idempotence, order preservation") {
    const Dunomial D{{2, 1}, {1, 1}, -1};
    const Dunomial R = reduce(D);
    CHECK(R.alpha == Exponent{1, 0});
    CHECK(R.beta == Exponent{0, 0});
    CHECK(is_reduced(R));
    CHECK(reduce(R) == R);

    RandomStream rs(Seed{191, 0});
    for (int t = 0; t < 1000; ++t) {
        const Dunomial X = random_dunomial(rs, 3, 5);
        const Dunomial Y = reduce(X);
        CHECK(is_reduced(Y));
        CHECK(dunomial_order(Y) == dunomial_order(X));
    }
}

TEST_CASE("reduce preserves zero sets at nonzero points") {
    RandomStream rs(Seed{201, 0});
    for (int t = 0; t < 50; ++t) {
        const Dunomial D = random_dunomial(rs, 2, 4);
        const Dunomial R = reduce(D);
        for (int s = 0; s < 20; ++s) {
            ComplexPoint x{{Complex(0.3 + rs.next_double(), rs.next_double() - 0.5),
                            Complex(0.3 + rs.next_double(), rs.next_double() - 0.5)}};
            CHECK(satisfied_numeric(D, x, 1e-9) == satisfied_numeric(R, x, 1e-9));
        }
    }
}

TEST_CASE("enumeration counts 2*C(M,2)") {
    CHECK(enumerate_dunomials(1, 2).size() == 6);
    CHECK(enumerate_dunomials(2, 2).size() == 30);
    // n^{2d} scaling at d=2: count ratio between 2n and n drifts toward 16
    const double r15 = double(enumerate_dunomials(2, 30).size()) /
                       double(enumerate_dunomials(2, 15).size());
    const double r8 = double(enumerate_dunomials(2, 16).size()) /
                      double(enumerate_dunomials(2, 8).size());
    CHECK(r15 > r8);
    CHECK(r15 > 12.0);
    CHECK(r15 < 16.0);
}

TEST_CASE("reduced enumeration by order") {
    CHECK(enumerate_reduced_by_order(1, 1).size() == 2);
    for (int r = 1; r <= 40; ++r) {
        const auto list = enumerate_reduced_by_order(2, r);
        CHECK(list.size() == 4u * r);  // linear in r at d=2
        for (const auto& D : list) {
            CHECK(is_reduced(D));
            CHECK(dunomial_order(D) == r);
        }
    }
}

TEST_CASE("exact and numeric satisfaction agree on rational points") {
    const auto dunomials = enumerate_dunomials(2, 4);
    const std::vector<ExactPoint> points = {
        pt({{1, 1}, {1, 1}}), pt({{2, 1}, {1, 2}}), pt({{2, 1}, {3, 1}}),
        pt({{-1, 1}, {1, 1}}), pt({{3, 2}, {2, 3}})};
    for (const auto& x : points) {
        ComplexPoint nx;
        for (const auto& c : x.coords)
            nx.coords.emplace_back(c.re.get_d(), c.im.get_d());
        for (const auto& D : dunomials)
            CHECK(satisfied_exact(D, x) == satisfied_numeric(D, nx, 1e-9));
    }
}

TEST_CASE("r_of_x examples") {
    CHECK(r_of_x_exact(pt({{1, 1}, {1, 1}}), 1) == 1);
    CHECK(r_of_x_exact(pt({{2, 1}, {1, 2}}), 4) == 2);
    CHECK_FALSE(r_of_x_exact(pt({{2, 1}}), 12).has_value());  // d=1, x=2
    CHECK(r_of_x_numeric(ComplexPoint{{Complex(2, 0), Complex(0.5, 0)}}, 4) == 2);
}

TEST_CASE("r_of_x is monotone non-increasing in the cap") {
    const auto x = pt({{4, 1}, {1, 2}});  // x1 * x2^2 = 1, order 3
    std::optional<int> prev;
    for (int cap = 1; cap <= 6; ++cap) {
        const auto r = r_of_x_exact(x, cap);
        if (prev && r) CHECK(*r <= *prev);
        if (prev) CHECK(r.has_value());
        if (r) prev = r;
    }
    CHECK(prev == 3);
}

TEST_CASE("zero coordinates are rejected") {
    CHECK_THROWS_AS(r_of_x_exact(pt({{0, 1}, {1, 1}}), 3), std::invalid_argument);
    CHECK_THROWS_AS(count_satisfied_numeric(ComplexPoint{{Complex(0, 0)}}, 3),
                    std::invalid_argument);
}

TEST_CASE("count_satisfied examples") {
    CHECK(count_satisfied_exact(pt({{2, 1}, {3, 1}}), 8) == 0);
    CHECK(count_satisfied_exact(pt({{1, 1}, {1, 1}}), 2) == 15);
}

TEST_CASE("count_satisfied matches the double-loop oracle") {
    const std::vector<ExactPoint> points = {
        pt({{1, 1}, {1, 1}}),  pt({{1, 1}, {-1, 1}}), pt({{2, 1}, {1, 2}}),
        pt({{2, 1}, {4, 1}}),  pt({{-2, 1}, {2, 1}}), pt({{3, 1}, {9, 1}}),
        pt({{2, 3}, {3, 2}}),  pt({{5, 1}, {7, 1}})};
    for (const auto& x : points)
        for (int n = 1; n <= 6; ++n)
            CHECK(count_satisfied_exact(x, n) == double_loop_count(x, 2, n));
}

TEST_CASE("canonical delta vectors cover order r exactly once") {
    for (int r = 1; r <= 6; ++r) {
        const auto deltas = canonical_deltas_of_order(2, r);
        CHECK(deltas.size() == 2u * r);  // half of the 4r lattice points
        for (const auto& d : deltas) {
            CHECK(std::abs(d[0]) + std::abs(d[1]) == r);
            const int first = d[0] != 0 ? d[0] : d[1];
            CHECK(first > 0);
        }
    }
}
