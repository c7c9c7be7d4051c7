#pragma once

#include <vector>

#include "wordmom/config.hpp"
#include "wordmom/rational.hpp"
#include "wordmom/word.hpp"

namespace wordmom {

/// Position-set scaffold for E(prod_k tr w_k(X_1,...,X_r)).
///
/// Omega is the disjoint union of the letter positions of all traces,
/// flattened; T is the cyclic successor within each trace. For each
/// generator i, A_i holds the positions carrying letter +i and B_i those
/// carrying -i. The problem is balanced iff |A_i| = |B_i| for every i.
struct TraceProductProblem {
    std::vector<Word> words;
    int d = 0;
    std::vector<int> letters;        // signed generator per position
    std::vector<int> t_successor;    // T(gamma)
    std::vector<int> generators;     // generator labels with any occurrence
    std::vector<std::vector<int>> a_positions;  // per generator, letter +i
    std::vector<std::vector<int>> b_positions;  // per generator, letter -i
    bool balanced = false;

    int omega_size() const { return static_cast<int>(letters.size()); }
    /// Sigma-enumeration size prod_i (|A_i|!)^2, as a double (may overflow
    /// int64 for infeasible inputs; only compared against the budget).
    double term_count() const;
};

/// Words must be nonempty and cyclically reduced.
TraceProductProblem build_problem(const std::vector<Word>& words, int d);

/// Exact E(prod_k tr w_k) over independent Haar unitaries.
///
/// Unbalanced problems return exactly 0 (phase symmetry of Haar measure).
/// Otherwise sums Wg-weighted pairings:
///   E = sum_{Sigma in H_Phi} Wgtilde_d(Sigma^2) * d^{c(Sigma T^{-1})},
/// where Sigma restricts to bijections alpha_i: A_i -> B_i and
/// beta_i: B_i -> A_i, Sigma^2|_{A_i} = beta_i . alpha_i feeds per-generator
/// Weingarten lookups, and c counts cycles on Omega.
///
/// Derivation from the entrywise expansion (the one step the source
/// material leaves implicit): expanding each trace over index functions
/// f: Omega -> [d] and integrating per generator gives, for each pairing,
/// the constraint f(T gamma) = f(Sigma gamma) for every position gamma;
/// the number of admissible f is d^{#cycles(Sigma T^{-1})} since f must be
/// constant on those cycles. This reduction is unit-tested against the
/// brute-force entrywise oracle.
///
/// Throws BudgetError when term_count() exceeds cfg.term_budget.
Rational expected_trace_product(const TraceProductProblem& problem,
                                const RunConfig& cfg = {});
Rational expected_trace_product(const std::vector<Word>& words, int d,
                                const RunConfig& cfg = {});

/// One matrix-entry factor X_{gen}[row,col] or its conjugate.
struct EntryFactor {
    int gen;   // generator index >= 1
    int row;   // in [0, d)
    int col;
    bool conjugated;
};

struct EntrySpec {
    std::vector<EntryFactor> factors;
    int d = 0;
};

/// Brute-force oracle for expected_trace_product: expands each trace over
/// all index functions f: Omega -> [d] and sums expected_entry_product over
/// the d^{|Omega|} assignments. Guard: d^{|Omega|} <= 1e6.
Rational expected_trace_product_entrywise(const std::vector<Word>& words, int d);

/// Exact E(prod of entries) by the Weingarten formula: per generator,
/// sum over pairs (sigma, tau) of bijections matching conjugated to
/// non-conjugated factors with row/column delta constraints, weighted by
/// Wg_d; independent generators multiply. Returns exact 0 when some
/// generator has unequal conjugated/non-conjugated counts.
/// Guard: per-generator factor count <= 8.
Rational expected_entry_product(const EntrySpec& spec);

}  // namespace wordmom
