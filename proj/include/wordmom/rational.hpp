#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wordmom {

// Exact arbitrary-precision integers and rationals. All expectation values
// produced by the exact pipeline are Rational; Integer is used for counts,
// dimensions and bound values. GMP keeps rationals in lowest terms.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(const Integer& n, unsigned k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer pow(const Integer& base, unsigned exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Renders a rational as "p" or "p/q" (always lowest terms).
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational: " + s);
    }
    q.canonicalize();
    return q;
}

/// Thrown when a computation would exceed its configured term budget.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(const std::string& what, double required_terms)
        : std::runtime_error(what), required_terms_(required_terms) {}
    double required_terms() const { return required_terms_; }

  private:
    double required_terms_;
};

}  // namespace wordmom
