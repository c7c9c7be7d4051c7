#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "wordmom/moments.hpp"

using namespace wordmom;

TEST_CASE("power-sum expansion small cases") {
    auto e1 = power_sum_expansion(Partition({1}));
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].second == 1);

    auto wedge2 = power_sum_expansion(Partition({1, 1}));
    for (const auto& [mu, c] : wedge2) {
        if (mu == Partition({1, 1})) CHECK(c == Rational(1, 2));
        if (mu == Partition({2})) CHECK(c == Rational(-1, 2));
    }
    auto sym2 = power_sum_expansion(Partition({2}));
    for (const auto& [mu, c] : sym2) {
        if (mu == Partition({1, 1})) CHECK(c == Rational(1, 2));
        if (mu == Partition({2})) CHECK(c == Rational(1, 2));
    }
}

TEST_CASE("first moments") {
    CHECK(first_moment(parse_word("x"), RepSelector::wedge(1), 3) == 0);
    for (int d = 2; d <= 4; ++d)
        CHECK(first_moment(parse_word("[x,y]"), RepSelector::wedge(1), d) ==
              Rational(1, d));
    CHECK_THROWS_AS(first_moment(parse_word("xX"), RepSelector::wedge(1), 2),
                    std::invalid_argument);
}

TEST_CASE("Schur orthogonality second moments") {
    for (int d = 1; d <= 4; ++d)
        for (int m = 1; m <= d; ++m)
            CHECK(second_moment(parse_word("x"), RepSelector::wedge(m), d) == 1);
}

TEST_CASE("power-word closed form") {
    // l=3, m=2, d=12: C(4,2) = 6 for both wedge and sym.
    CHECK(second_moment(parse_word("x^3"), RepSelector::wedge(2), 12) == 6);
    CHECK(second_moment(parse_word("x^3"), RepSelector::sym(2), 12) == 6);
    // l=2, m=1, d=4: C(2,1) = 2.
    CHECK(second_moment(parse_word("x^2"), RepSelector::wedge(1), 4) == 2);
}

TEST_CASE("moments are invariant under cyclic conjugation of the input") {
    Word w = parse_word("xyXy");
    Word conj = parse_word("z") * w * parse_word("Z");  // cyclic_reduce applied inside
    CHECK(second_moment(w, RepSelector::wedge(1), 4) ==
          second_moment(conj, RepSelector::wedge(1), 4));
}

TEST_CASE("ds_moment anchors") {
    CHECK(ds_moment({1}, {1}, 1, 2) == 1);
    CHECK(ds_moment({0, 1}, {2, 0}, 1, 4) == 0);
    CHECK(ds_moment({0, 1}, {0, 1}, 1, 4) == 2);
    // Empty statistic integrates to 1.
    CHECK(ds_moment({}, {}, 1, 3) == 1);
    // l = 2 scaling: E tr(X^2) tr(conj X^2) = 2 at d >= 2.
    CHECK(ds_moment({1}, {1}, 2, 4) == 2);
}

TEST_CASE("limit polynomial m = 1 and 2") {
    LimitPolynomial p1 = limit_polynomial(1, 2);
    REQUIRE(p1.terms.size() == 1);
    CHECK(p1.terms[0].exponents == std::vector<int>{1});
    CHECK(p1.terms[0].coefficient * p1.terms[0].coefficient * Rational(p1.terms[0].radicand) ==
          Rational(2));

    LimitPolynomial p2 = limit_polynomial(2, 1);
    REQUIRE(p2.terms.size() == 2);
    for (const auto& t : p2.terms) {
        if (t.exponents == std::vector<int>{2, 0}) {
            CHECK(t.coefficient == Rational(1, 2));
            CHECK(t.radicand == 1);
        } else {
            CHECK(t.exponents == std::vector<int>{0, 1});
            // -sqrt(2)/2 stored as coefficient -1/2, radicand 2.
            CHECK(t.coefficient == Rational(-1, 2));
            CHECK(t.radicand == 2);
        }
    }
}

TEST_CASE("limit polynomial radicands are squarefree") {
    for (int m = 1; m <= 5; ++m)
        for (int p = 1; p <= 4; ++p)
            for (const auto& t : limit_polynomial(m, p).terms)
                for (Integer q = 2; q * q <= t.radicand; ++q)
                    CHECK(t.radicand % (q * q) != 0);
}

TEST_CASE("limit polynomial evaluation") {
    LimitPolynomial p2 = limit_polynomial(2, 1);
    std::vector<std::complex<double>> z = {{1.0, 0.0}, {2.0, 0.0}};
    // (z1^2 - sqrt(2) z2)/2 = (1 - 2 sqrt 2)/2.
    std::complex<double> v = p2.evaluate(z);
    CHECK(std::abs(v.real() - (1.0 - 2.0 * std::sqrt(2.0)) / 2.0) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("RepSelector to_partition") {
    CHECK(RepSelector::wedge(3).to_partition() == Partition({1, 1, 1}));
    CHECK(RepSelector::sym(3).to_partition() == Partition({3}));
    CHECK(RepSelector::of(Partition({2, 1})).to_partition() == Partition({2, 1}));
}
