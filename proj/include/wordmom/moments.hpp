#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "wordmom/config.hpp"
#include "wordmom/engine.hpp"
#include "wordmom/partition.hpp"
#include "wordmom/rational.hpp"
#include "wordmom/word.hpp"

namespace wordmom {

/// Representation selector: wedge m = exterior power (lambda = (1^m)),
/// sym m = symmetric power (lambda = (m)), or an explicit partition.
struct RepSelector {
    enum Kind { Wedge, Sym, Lambda } kind = Wedge;
    int m = 1;           // for Wedge/Sym
    Partition lambda;    // for Lambda

    Partition to_partition() const;
    static RepSelector wedge(int m) { return {Wedge, m, {}}; }
    static RepSelector sym(int m) { return {Sym, m, {}}; }
    static RepSelector of(Partition p) { return {Lambda, p.size(), std::move(p)}; }
};

/// rho_lambda(A) = sum_mu chi_lambda(mu)/z_mu * tr_mu(A); returns the
/// (mu, coefficient) pairs over all mu of |lambda|. Guard: |lambda| <= 8.
std::vector<std::pair<Partition, Rational>> power_sum_expansion(const Partition& lambda);

/// Exact E(rho_lambda(w(X))); E(c_m(w)) = (-1)^m * result for lambda=(1^m).
/// Requires w nonempty; cyclically reduces it first (traces are invariant).
Rational first_moment(const Word& w, const RepSelector& rep, int d,
                      const RunConfig& cfg = {});

/// Exact E|rho_lambda(w(X))|^2, via
///   sum_{mu,mu'} (chi(mu)/z_mu)(chi(mu')/z_mu') E(tr_mu(w) tr_mu'(w^-1)).
/// For wedge m this equals E|c_m(w)|^2. Budget errors name the offending
/// (mu, mu') pair.
Rational second_moment(const Word& w, const RepSelector& rep, int d,
                       const RunConfig& cfg = {});

/// Diaconis-Shahshahani style joint moment
///   E( prod_j tr(X^{jl})^{a_j} * prod_j tr(conj X^{jl})^{b_j} ),
/// a_j = a[j-1], b_j = b[j-1]. For d >= l*sum_j (a_j+b_j)j this equals
/// delta_{a,b} prod_j (jl)^{a_j} a_j!.
Rational ds_moment(const std::vector<int>& a, const std::vector<int>& b, int l,
                   int d, const RunConfig& cfg = {});

/// One monomial of the large-d limit polynomial: coefficient * sqrt(radicand)
/// * prod_j Z_j^{exponents[j-1]}, radicand squarefree.
struct LimitTerm {
    std::vector<int> exponents;
    Rational coefficient;
    Integer radicand;
};

/// (1/m!) det of the almost-triangular m x m matrix with entries
/// sqrt(jp) Z_j below/on the diagonal (j = row - col + 1) and superdiagonal
/// 1, 2, ..., m-1; the limit in distribution of tr wedge^m w as d -> oo,
/// with Z_j i.i.d. standard complex normals and p = p(w).
struct LimitPolynomial {
    int m = 0;
    int p = 1;
    std::vector<LimitTerm> terms;  // sorted by exponent vector

    std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const;
};

/// Guard: m <= 8.
LimitPolynomial limit_polynomial(int m, int p);

}  // namespace wordmom
