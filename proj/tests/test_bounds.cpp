#include <doctest.h>

#include "wordmom/bounds.hpp"

using namespace wordmom;

TEST_CASE("bound_report anchor values") {
    BoundReport r = bound_report(8, 1, 16);
    CHECK(r.wedge_bound == pow(Integer(200), 8));
    CHECK(r.sym_bound == pow(Integer(128), 8));
    CHECK(r.engel_bound == 131072);  // 2^17 at m=1
    CHECK(r.second_moment_applicable);  // d = 16 >= 8
    CHECK(!r.wedge_secondary_applicable);
    CHECK(!r.main_exponent_applicable);

    BoundReport small = bound_report(2, 1, 4);
    CHECK(!small.wedge_secondary_applicable);  // threshold (25*2)^2 = 2500
    CHECK(small.main_threshold == pow(Integer(50), 14));
    CHECK(small.epsilon_w == Rational(1) / Rational(72 * pow(Integer(50), 4u)));

    BoundReport big = bound_report(2, 1, 2500);
    CHECK(big.wedge_secondary_applicable);
    CHECK(big.binom_dm == 2500);
}

TEST_CASE("entropy inequality samples") {
    std::vector<EntropySample> samples = {
        {Rational(1, 2), Rational(1, 2), Rational(1, 2), 18},
        {Rational(1, 4), Rational(1, 2), Rational(1, 4), 260},
        // d too small for delta = 1/2 (needs d > 16):
        {Rational(1, 2), Rational(1, 2), Rational(1, 2), 10},
        // b*d not integral:
        {Rational(1, 4), Rational(1, 3), Rational(1, 4), 260},
    };
    auto verdicts = entropy_checks(samples);
    REQUIRE(verdicts.size() == 4);
    CHECK(verdicts[0].hypotheses_ok);
    CHECK(verdicts[0].holds);
    CHECK(verdicts[1].hypotheses_ok);
    CHECK(verdicts[1].holds);
    CHECK(!verdicts[2].hypotheses_ok);
    CHECK(!verdicts[3].hypotheses_ok);
}

TEST_CASE("entropy sandwich") {
    CHECK(entropy_sandwich_holds(Rational(1, 4), 64));
    CHECK(entropy_sandwich_holds(Rational(1, 2), 10));
    CHECK(entropy_sandwich_holds(Rational(1, 8), 80));
}

TEST_CASE("Stirling sandwich") {
    for (int n = 2; n <= 60; ++n)
        for (int k = 1; 2 * k <= n; ++k) CHECK(stirling_sandwich_holds(n, k));
}

TEST_CASE("compare_with_exp separates rationals from e^k") {
    CHECK(compare_with_exp(Rational(2), 1) < 0);   // 2 < e
    CHECK(compare_with_exp(Rational(3), 1) > 0);   // 3 > e
    CHECK(compare_with_exp(Rational(7), 2) < 0);   // 7 < e^2 = 7.389
    CHECK(compare_with_exp(Rational(15, 2), 2) > 0);
}
