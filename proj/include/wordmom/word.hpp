#pragma once

#include <string>
#include <vector>

namespace wordmom {

/// Freely reduced word in the free group: letter i means x_i, -i means
/// x_i^{-1} (i >= 1). The empty word is the identity.
class Word {
  public:
    Word() = default;
    /// Freely reduces the given letter sequence. Letters must be nonzero.
    explicit Word(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int u) const { return letters_[u]; }
    /// Largest generator index used; 0 for the empty word.
    int rank() const;

    Word inverse() const;
    /// Literal concatenation w^k (k >= 0); input must be cyclically reduced
    /// for the result to be freely reduced, which the constructor enforces
    /// anyway.
    Word power(int k) const;
    Word operator*(const Word& other) const;  // freely reduced concatenation

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator<(const Word& o) const { return letters_ < o.letters_; }

    /// Compact display: "xyXY" style for generators 1..26, "x4" style beyond.
    std::string display() const;
    /// JSON form: array of signed integers, e.g. "[1,2,-1,-2]".
    std::string to_json() const;

  private:
    std::vector<int> letters_;
};

/// Parses the word grammar: letters a-z are generators (x->1, y->2, z->3,
/// then a->4, b->5, ... skipping x,y,z), uppercase = inverse, xN numbered
/// generators, ^k integer powers, [u,v] = u v u^-1 v^-1, juxtaposition =
/// concatenation, whitespace ignored. Throws std::invalid_argument with the
/// offending position on syntax errors.
Word parse_word(const std::string& text);

/// Strips matching inverse first/last letters until cyclically reduced.
Word cyclic_reduce(const Word& w);

/// Rotation by k: letters k, k+1, ..., 0, ..., k-1.
Word cyclic_rotate(const Word& w, int k);

/// Maximal p with w = u^p as literal concatenation; u primitive.
/// Contract: w nonempty and cyclically reduced.
struct PowerDecomposition {
    Word base;
    int exponent;
};
PowerDecomposition power_decomposition(const Word& w);

/// w1 followed by w2 with w2's generators shifted by rank(w1).
Word concatenate_fresh(const Word& w1, const Word& w2);

}  // namespace wordmom
