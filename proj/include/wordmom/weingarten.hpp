#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wordmom/characters.hpp"
#include "wordmom/partition.hpp"
#include "wordmom/permutation.hpp"
#include "wordmom/rational.hpp"

namespace wordmom {

/// Exact Weingarten function Wg_d on S_n, stored per cycle type:
///   Wg_d(sigma) = (1/n!^2) sum_{lambda |- n, l(lambda) <= d}
///                 chi_lambda(1)^2 / rho_lambda(1) * chi_lambda(sigma).
/// For d < n this is the pseudo-inverse of sigma -> d^{#cycles(sigma)}
/// restricted to the subalgebra spanned by lambda with at most d rows.
class WeingartenTable {
  public:
    /// Built lazily and cached per (n, d); n <= 16 guard.
    static const WeingartenTable& get(int n, int d);

    int degree() const { return n_; }
    int dimension() const { return d_; }

    const Rational& value(const Partition& cycle_type) const;
    const Rational& value(const Permutation& sigma) const;
    const Rational& value_at(int mu_idx) const { return values_[mu_idx]; }

    /// Cycle types in table order (canonical partition order of degree n).
    const std::vector<Partition>& cycle_types() const;

  private:
    WeingartenTable(int n, int d);

    int n_;
    int d_;
    std::vector<Rational> values_;  // indexed like CharacterTable::partitions()
};

}  // namespace wordmom
