#pragma once

#include <string>
#include <vector>

#include "wordmom/rational.hpp"

namespace wordmom {

/// Every explicit bound/constant tied to a (word length, m, d) cell, as
/// exact values, with per-theorem applicability flags.
struct BoundReport {
    int ell = 0, m = 0, d = 0;

    Integer wedge_bound;       // (25 ell)^{m ell}
    Integer sym_bound;         // (16 ell)^{m ell}
    Integer binom_dm;          // C(d, m)
    Integer binom_sym;         // C(d+m-1, m)
    Integer engel_bound;       // 2^{17 m}
    Rational epsilon_w;        // (1/72)(25 ell)^{-2 ell}
    Integer main_threshold;    // (25 ell)^{7 ell}

    bool second_moment_applicable = false;   // d >= m ell (wedge & sym bounds)
    bool wedge_secondary_applicable = false; // d >= (25 ell)^ell * m
    bool sym_secondary_applicable = false;   // d >= (16 ell)^ell * m
    bool engel_applicable = false;           // d >= 2m
    bool main_exponent_applicable = false;   // d >= (25 ell)^{7 ell}
};

BoundReport bound_report(int ell, int m, int d);

/// One test case for the entropy/binomial inequality
/// C(d, (b-a)d) <= C(d, bd)^{1-delta^2}.
struct EntropySample {
    Rational delta, b, a;
    int d = 0;
};

struct EntropyVerdict {
    EntropySample sample;
    bool hypotheses_ok = false;  // 0<delta<=1/2, b in [delta,1/2], a in [delta,b],
                                 // d > delta^-4, bd and ad integral
    bool holds = false;          // only meaningful when hypotheses_ok
    std::string note;
};

/// The rational exponent 1-delta^2 = p/q makes the inequality equivalent to
/// C(d,(b-a)d)^q <= C(d,bd)^p, decided with exact big integers.
std::vector<EntropyVerdict> entropy_checks(const std::vector<EntropySample>& samples);

/// Binary-entropy sandwich 2^{dH(x)}/sqrt(8dx(1-x)) <= C(d, xd) <= 2^{dH(x)}
/// for rational x with xd integral; 2^{dH(x)} = d^d/(k^k (d-k)^{d-k}) is
/// rational, so both sides compare exactly.
bool entropy_sandwich_holds(const Rational& x, int d);

/// Stirling sandwich (n/k)^k <= C(n,k) <= (n/k)^k e^k for 1 <= k <= n/2.
/// Left side exact; the e^k side decided by adaptive-precision interval
/// arithmetic (MPFR directed rounding).
bool stirling_sandwich_holds(int n, int k);

/// Sign of q - e^k, decided by widening MPFR intervals (never 0: e^k is
/// irrational for k >= 1).
int compare_with_exp(const Rational& q, unsigned k);

}  // namespace wordmom
