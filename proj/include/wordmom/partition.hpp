#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordmom/rational.hpp"

namespace wordmom {

/// Integer partition: strictly positive, non-increasing parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }           // number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    /// JSON form: "[3,1,1]".
    std::string to_json() const;

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
/// Filtered to length() <= max_length when max_length > 0.
std::vector<Partition> enumerate_partitions(int n, int max_length = 0);

/// Product of hook lengths over all cells of the diagram.
Integer hook_product(const Partition& lambda);

/// chi_lambda(1) = n!/hook_product(lambda); always an exact integer.
Integer symmetric_group_dimension(const Partition& lambda);

/// Unsigned Stirling number of the first kind: permutations of m with k cycles.
Integer stirling_unsigned(int m, int k);

/// z_mu = prod_j a_j! j^{a_j} for mu = (1^{a_1} 2^{a_2} ...); the centralizer
/// order of the class mu, so the class size is n!/z_mu.
Integer centralizer_order(const Partition& mu);

/// Multiplicity vector (a_1,...,a_n) of mu as a partition of n.
std::vector<int> multiplicity_vector(const Partition& mu, int n);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}, computed by literal
/// enumeration of strict mu-expansions of lambda. Guarded to |lambda|+|mu|<=20.
Integer lr_coefficient(const Partition& lambda, const Partition& mu,
                       const Partition& nu);

}  // namespace wordmom
