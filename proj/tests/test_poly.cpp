#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "crl/poly.hpp"

using namespace crl;

TEST_CASE("graded-lex exponent counts are C(n+d, d)") {
    CHECK(graded_lex_exponents(1, 3).size() == 4);
    CHECK(graded_lex_exponents(2, 2).size() == 6);
    CHECK(graded_lex_exponents(3, 10).size() == 286);
    CHECK(exponent_count(3, 10) == 286);
    CHECK(exponent_count(2, 2) == 6);
}

TEST_CASE("graded-lex order: ascending total degree, then lex") {
    const auto e = graded_lex_exponents(2, 2);
    auto total = [](const Exponent& v) { return v[0] + v[1]; };
    for (std::size_t i = 1; i < e.size(); ++i) {
        const int ta = total(e[i - 1]), tb = total(e[i]);
        CHECK(ta <= tb);
        if (ta == tb) CHECK(e[i - 1] < e[i]);
    }
    CHECK(e.front() == Exponent{0, 0});
    CHECK(e.back() == Exponent{2, 0});
}

TEST_CASE("sampling is deterministic and rejects d = 0") {
    const auto a = sample_uni(5, Seed{11, 3});
    const auto b = sample_uni(5, Seed{11, 3});
    CHECK(a.coeffs == b.coeffs);
    CHECK(a.degree() == 5);
    for (Sign s : a.coeffs) CHECK((s == 1 || s == -1));

    const auto m1 = sample_multi(2, 2, Seed{4, 4});
    const auto m2 = sample_multi(2, 2, Seed{4, 4});
    CHECK(m1.coeffs == m2.coeffs);
    CHECK(m1.term_count() == 6);
    CHECK(sample_multi(1, 3, Seed{0, 0}).term_count() == 4);
    CHECK_THROWS_AS(sample_multi(0, 3, Seed{0, 0}), std::invalid_argument);
}

TEST_CASE("n = 0 sample is a single ±1 coefficient") {
    const auto p = sample_uni(0, Seed{7, 0});
    CHECK(p.coeffs.size() == 1);
    CHECK((p.coeffs[0] == 1 || p.coeffs[0] == -1));
}

TEST_CASE("univariate evaluation") {
    const BernoulliPolyUni ones{{1, 1, 1, 1}};
    CHECK(eval(ones, Complex(1, 0)).real() == doctest::Approx(4.0));
    const BernoulliPolyUni alt{{1, -1, 1}};
    CHECK(eval(alt, Complex(-1, 0)).real() == doctest::Approx(3.0));
    const auto p = sample_uni(9, Seed{3, 1});
    CHECK(eval(p, Complex(0, 0)).real() == doctest::Approx(double(p.coeffs[0])));
}

TEST_CASE("multivariate evaluation at all-ones sums the coefficients") {
    const auto p = sample_multi(2, 3, Seed{5, 0});
    double sum = 0;
    for (Sign s : p.coeffs) sum += s;
    const ComplexPoint ones{{Complex(1, 0), Complex(1, 0)}};
    CHECK(eval(p, ones).real() == doctest::Approx(sum));
}

TEST_CASE("eval_at_pm1 examples and parity invariant") {
    CHECK(eval_at_pm1(BernoulliPolyUni{{1, 1}}) == std::pair<long long, long long>{2, 0});
    CHECK(eval_at_pm1(BernoulliPolyUni{{1, -1, 1, -1}}) ==
          std::pair<long long, long long>{0, 4});
    for (int n = 0; n <= 20; ++n) {
        const auto p = sample_uni(n, Seed{77, static_cast<std::uint64_t>(n)});
        const auto [v1, vm1] = eval_at_pm1(p);
        CHECK(((v1 - (n + 1)) % 2 + 2) % 2 == 0);
        CHECK(((vm1 - (n + 1)) % 2 + 2) % 2 == 0);
        CHECK(eval(p, Complex(1, 0)).real() == doctest::Approx(double(v1)));
        CHECK(eval(p, Complex(-1, 0)).real() == doctest::Approx(double(vm1)));
    }
}

TEST_CASE("no root at radius 2 or radius 1/2 (annulus margin)") {
    for (int k = 0; k < 50; ++k) {
        const auto p = sample_uni(32, Seed{19, static_cast<std::uint64_t>(k)});
        for (double arg : {0.0, 1.1, 2.7, 4.0}) {
            const Complex big = std::polar(2.0, arg);
            const Complex small = std::polar(0.5, arg);
            // |P(x)| >= |x|^n - (|x|^n - 1)/(|x| - 1) > 0 for |x| = 2
            CHECK(std::abs(eval(p, big)) > 0.9);
            CHECK(std::abs(eval(p, small)) > 1e-6);
        }
    }
}

TEST_CASE("sign-string round trip") {
    const BernoulliPolyUni p{{1, -1, 1}};
    CHECK(to_sign_string(p) == "+-+");
    CHECK(from_sign_string("+-+").coeffs == p.coeffs);
    const auto q = sample_uni(40, Seed{2, 2});
    CHECK(from_sign_string(to_sign_string(q)).coeffs == q.coeffs);
    CHECK_THROWS_AS(from_sign_string("+0-"), std::invalid_argument);
    CHECK_THROWS_AS(from_sign_string(""), std::invalid_argument);
}

TEST_CASE("canonical multivariate serialization round trip") {
    const auto p = sample_multi(2, 4, Seed{8, 1});
    const std::string text = serialize(p);
    CHECK(text.substr(0, 3) == "2 4");
    const auto q = deserialize_multi(text);
    CHECK(q.d == p.d);
    CHECK(q.degree_n == p.degree_n);
    CHECK(q.coeffs == p.coeffs);
}
