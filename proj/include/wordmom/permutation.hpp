#pragma once

#include <vector>

#include "wordmom/partition.hpp"

namespace wordmom {

/// Permutation of {0,...,n-1} in one-line notation: image(i) = images_[i].
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    /// Composition acting left-to-last: (a*b)(i) = a(b(i)).
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;

    Partition cycle_type() const;
    int num_cycles() const;
    int sign() const;  // +1 or -1

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

  private:
    std::vector<int> images_;
};

/// All n! permutations of degree n, lexicographic by one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace wordmom
