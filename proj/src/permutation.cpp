#include "wordmom/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wordmom {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> im(degree());
    for (int i = 0; i < degree(); ++i) im[i] = images_[other.images_[i]];
    Permutation r;
    r.images_ = std::move(im);
    return r;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(degree());
    for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
    Permutation r;
    r.images_ = std::move(im);
    return r;
}

Partition Permutation::cycle_type() const {
    std::vector<char> seen(degree(), 0);
    std::vector<int> lens;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

int Permutation::num_cycles() const {
    std::vector<char> seen(degree(), 0);
    int cycles = 0;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = images_[j]) seen[j] = 1;
    }
    return cycles;
}

int Permutation::sign() const {
    return (degree() - num_cycles()) % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace wordmom
