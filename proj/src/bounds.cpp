#include "wordmom/bounds.hpp"

#include <mpfr.h>

#include <sstream>
#include <stdexcept>

namespace wordmom {

BoundReport bound_report(int ell, int m, int d) {
    if (ell < 1 || m < 1 || d < 1)
        throw std::invalid_argument("bound_report: arguments must be positive");
    BoundReport r;
    r.ell = ell;
    r.m = m;
    r.d = d;
    unsigned mell = static_cast<unsigned>(m) * static_cast<unsigned>(ell);
    r.wedge_bound = pow(Integer(25 * ell), mell);
    r.sym_bound = pow(Integer(16 * ell), mell);
    r.binom_dm = binomial(static_cast<unsigned>(d), static_cast<unsigned>(m));
    r.binom_sym = binomial(static_cast<unsigned>(d + m - 1), static_cast<unsigned>(m));
    r.engel_bound = pow(Integer(2), 17 * static_cast<unsigned>(m));
    r.epsilon_w = Rational(1) / Rational(72 * pow(Integer(25 * ell), 2 * static_cast<unsigned>(ell)));
    r.main_threshold = pow(Integer(25 * ell), 7 * static_cast<unsigned>(ell));

    r.second_moment_applicable = d >= m * ell;
    r.wedge_secondary_applicable = Integer(d) >= pow(Integer(25 * ell), static_cast<unsigned>(ell)) * m;
    r.sym_secondary_applicable = Integer(d) >= pow(Integer(16 * ell), static_cast<unsigned>(ell)) * m;
    r.engel_applicable = d >= 2 * m;
    r.main_exponent_applicable = Integer(d) >= r.main_threshold;
    return r;
}

namespace {

// x*d if integral, else nullopt-style flag via bool.
bool integral_scale(const Rational& x, int d, Integer& out) {
    Rational v = x * d;
    if (v.get_den() != 1) return false;
    out = v.get_num();
    return true;
}

}  // namespace

std::vector<EntropyVerdict> entropy_checks(const std::vector<EntropySample>& samples) {
    std::vector<EntropyVerdict> out;
    for (const auto& s : samples) {
        EntropyVerdict v;
        v.sample = s;
        Integer bd, ad;
        Rational quarter_delta = pow(s.delta, 4);
        bool hyp = s.delta > 0 && s.delta <= Rational(1, 2) && s.b >= s.delta &&
                   s.b <= Rational(1, 2) && s.a >= s.delta && s.a <= s.b && s.d >= 1 &&
                   quarter_delta * s.d > 1 && integral_scale(s.b, s.d, bd) &&
                   integral_scale(s.a, s.d, ad);
        v.hypotheses_ok = hyp;
        if (!hyp) {
            v.note = "hypotheses violated; inequality not asserted";
            out.push_back(std::move(v));
            continue;
        }
        // 1 - delta^2 = p/q; compare L^q <= R^p exactly.
        Rational expo = Rational(1) - s.delta * s.delta;
        Integer p = expo.get_num(), q = expo.get_den();
        unsigned d = static_cast<unsigned>(s.d);
        Integer diff = bd - ad;
        Integer lhs = binomial(d, static_cast<unsigned>(diff.get_ui()));
        Integer rhs = binomial(d, static_cast<unsigned>(bd.get_ui()));
        Integer lq = pow(lhs, static_cast<unsigned>(q.get_ui()));
        Integer rp = pow(rhs, static_cast<unsigned>(p.get_ui()));
        v.holds = lq <= rp;
        std::ostringstream note;
        note << "C(" << d << "," << (bd - ad) << ")^" << q << " vs C(" << d << "," << bd
             << ")^" << p;
        v.note = note.str();
        out.push_back(std::move(v));
    }
    return out;
}

bool entropy_sandwich_holds(const Rational& x, int d) {
    Integer k;
    if (!integral_scale(x, d, k) || k <= 0 || k >= d)
        throw std::invalid_argument("entropy_sandwich_holds: need xd integral, 0 < xd < d");
    unsigned ku = static_cast<unsigned>(k.get_ui());
    unsigned du = static_cast<unsigned>(d);
    Integer c = binomial(du, ku);
    // 2^{dH(x)} = d^d / (k^k (d-k)^{d-k}) for x = k/d with H base-2.
    Integer num = pow(Integer(d), du);
    Integer dk = Integer(d) - k;
    Integer den = pow(k, ku) * pow(dk, du - ku);
    Rational two_dh = Rational(num) / Rational(den);
    // Upper: C <= 2^{dH}.
    if (!(Rational(c) <= two_dh)) return false;
    // Lower: 2^{dH}/sqrt(8dx(1-x)) <= C  <=>  (2^{dH})^2 <= C^2 * 8dx(1-x).
    Rational radicand = Rational(8 * d) * x * (Rational(1) - x);
    return two_dh * two_dh <= Rational(c) * Rational(c) * radicand;
}

int compare_with_exp(const Rational& q, unsigned k) {
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        mpfr_t lo, hi, qv;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_init2(qv, prec);
        mpfr_set_ui(lo, k, MPFR_RNDD);
        mpfr_exp(lo, lo, MPFR_RNDD);  // lower bound on e^k
        mpfr_set_ui(hi, k, MPFR_RNDU);
        mpfr_exp(hi, hi, MPFR_RNDU);  // upper bound on e^k
        int result = 0;
        // Compare q against the interval [lo, hi] exactly.
        int vs_lo = mpfr_cmp_q(lo, q.get_mpq_t());
        int vs_hi = mpfr_cmp_q(hi, q.get_mpq_t());
        if (vs_lo > 0)
            result = -1;  // q < lo <= e^k
        else if (vs_hi < 0)
            result = 1;  // q > hi >= e^k
        mpfr_clear(lo);
        mpfr_clear(hi);
        mpfr_clear(qv);
        if (result != 0) return result;
        if (prec > 1 << 20)
            throw std::runtime_error("compare_with_exp: interval did not separate");
    }
}

bool stirling_sandwich_holds(int n, int k) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("stirling_sandwich_holds: need 1 <= k <= n/2");
    Rational ratio = Rational(n) / Rational(k);
    Rational left = pow(ratio, static_cast<unsigned>(k));
    Rational c(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    if (!(left <= c)) return false;
    // C(n,k) <= (n/k)^k e^k  <=>  C(n,k) (k/n)^k <= e^k.
    return compare_with_exp(c / left, static_cast<unsigned>(k)) < 0;
}

}  // namespace wordmom
