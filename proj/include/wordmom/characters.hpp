#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "wordmom/partition.hpp"
#include "wordmom/permutation.hpp"
#include "wordmom/rational.hpp"

namespace wordmom {

/// Full character table of S_n. Rows are partitions lambda (irreducibles),
/// columns are cycle types mu, both in the canonical reverse-lexicographic
/// order. Built once per n and cached; immutable afterwards.
class CharacterTable {
  public:
    static const CharacterTable& get(int n);

    int degree() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    int index_of(const Partition& p) const;

    long long value(const Partition& lambda, const Partition& mu) const;
    long long value_at(int lambda_idx, int mu_idx) const { return values_[lambda_idx][mu_idx]; }

    /// Class size n!/z_mu of the cycle type at column index.
    const Integer& class_size(int mu_idx) const { return class_sizes_[mu_idx]; }

  private:
    explicit CharacterTable(int n);

    int n_;
    std::vector<Partition> partitions_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<long long>> values_;
    std::vector<Integer> class_sizes_;
};

/// chi_lambda evaluated on the class mu (Murnaghan-Nakayama).
long long character_value(const Partition& lambda, const Partition& mu);

/// Dimension of the U(d) irreducible with highest weight lambda:
/// chi_lambda(1) * prod_{(i,j) in lambda} (d + j - i) / |lambda|!.
Integer unitary_dimension(const Partition& lambda, int d);

enum class LinearCharacter { Trivial, Sign };

/// Young subgroup S_m^l inside S_{ml}, blocks {0..m-1},{m..2m-1},...
struct YoungSubgroup {
    int m;
    int l;
    int degree() const { return m * l; }
    Integer order() const;
    /// All |S_m|^l elements as permutations of S_{ml}.
    std::vector<Permutation> elements() const;
};

/// <Ind_{S_m^l}^{S_ml} xi, chi_nu> by Frobenius reciprocity (summation over
/// component cycle types, weighted by class sizes). Guard: m*l <= 10.
Integer induced_multiplicity(int m, int l, const Partition& nu, LinearCharacter xi);

/// (1/|H|) sum_{h in H} xi(h)^{-1} chi_lambda(g h), H = S_m^l. Guard: ml <= 8.
Rational coset_average(const YoungSubgroup& H, LinearCharacter xi,
                       const Partition& lambda, const Permutation& g);

/// Partition of S_n into H-double-cosets; each entry lists the elements of
/// one double coset (first element is the representative).
std::vector<std::vector<Permutation>> double_cosets(int n, const YoungSubgroup& H);

}  // namespace wordmom
