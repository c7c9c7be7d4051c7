#pragma once

#include <functional>
#include <vector>

#include "wordmom/config.hpp"
#include "wordmom/permutation.hpp"
#include "wordmom/rational.hpp"

namespace wordmom {

/// One element of the set Z driving the Engel-word pipeline: index vectors
/// a, b, c, d2 (the free data; the d-vector is named d2 to avoid clashing
/// with the dimension d), the derived vectors A2, B2, C2, D2, and the four
/// permutations in S_{2m}. Vector entries live in [0, d).
///
/// Vectors are acted on by sigma in S_{2m} via (sigma v)_k = v_{sigma^-1(k)};
/// membership in Z requires
///   sigma1(A|B) = (a|b),  tau1(c|d2) = (D2|C2),
///   sigma2(a|d2) = (A2|D2),  tau2(B2|C2) = (b|c),
/// where (u|v) is concatenation.
struct EngelConfiguration {
    std::vector<int> a, b, c, d2;
    std::vector<int> A2, B2, C2, D2;
    Permutation sigma1, sigma2, tau1, tau2;
};

/// Prop 3.4 upper bound m!^7 C(2m,m)^4 C(d,m) C(d+m-1,m)^3 on |Z|.
Integer z_bound(int m, int d);

/// Visits every element of Z exactly once. Enumeration: loop over the free
/// data (a strictly increasing, b, c, d2, sigma2, tau2), derive (A2, D2)
/// from sigma2 and (B2, C2) from tau2, then enumerate the (sigma1, tau1)
/// satisfying the remaining two constraints. Throws BudgetError when the
/// outer loop exceeds cfg.term_budget.
void enumerate_Z(int m, int d, const RunConfig& cfg,
                 const std::function<void(const EngelConfiguration&)>& visit);

Integer z_count(int m, int d, const RunConfig& cfg = {});

/// E(tr wedge^m [[X,Y],Y]) by the direct pipeline:
///   sum_Z sum_{pi in S_m} (-1)^pi Wg(sigma1^-1 tau1) Wg((pi x Id) sigma2^-1 tau2).
/// E(c_m) = (-1)^m times this value.
Rational engel_direct(int m, int d, const RunConfig& cfg = {});

}  // namespace wordmom
