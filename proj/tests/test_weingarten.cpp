#include <doctest.h>

#include <vector>

#include "wordmom/weingarten.hpp"

using namespace wordmom;

TEST_CASE("Wg at n = 1") {
    for (int d = 1; d <= 6; ++d)
        CHECK(WeingartenTable::get(1, d).value(Partition({1})) == Rational(1, d));
}

TEST_CASE("Wg at n = 2, d >= 2") {
    for (int d = 2; d <= 6; ++d) {
        const WeingartenTable& wg = WeingartenTable::get(2, d);
        Integer dd(d);
        CHECK(wg.value(Partition({1, 1})) == Rational(1) / Rational(dd * dd - 1));
        CHECK(wg.value(Partition({2})) == Rational(-1) / Rational(dd * (dd * dd - 1)));
    }
}

TEST_CASE("Wg at n = 2, d = 1 (pseudo-inverse regime)") {
    const WeingartenTable& wg = WeingartenTable::get(2, 1);
    CHECK(wg.value(Partition({1, 1})) == Rational(1, 4));
    CHECK(wg.value(Partition({2})) == Rational(1, 4));
}

namespace {

// Independent oracle: solve the Gram system G x = e_id over the rationals by
// Gaussian elimination on the full |S_n| x |S_n| matrix (d >= n, so G is
// invertible) and compare per permutation.
std::vector<Rational> gram_inverse_column(int n, int d) {
    auto perms = all_permutations(n);
    size_t N = perms.size();
    std::vector<std::vector<Rational>> aug(N, std::vector<Rational>(N + 1, Rational(0)));
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < N; ++j) {
            int cycles = (perms[i].inverse() * perms[j]).num_cycles();
            aug[i][j] = Rational(pow(Integer(d), static_cast<unsigned>(cycles)));
        }
        aug[i][N] = perms[i] == Permutation::identity(n) ? Rational(1) : Rational(0);
    }
    for (size_t col = 0; col < N; ++col) {
        size_t piv = col;
        while (aug[piv][col] == 0) ++piv;
        std::swap(aug[col], aug[piv]);
        Rational inv = Rational(1) / aug[col][col];
        for (size_t j = col; j <= N; ++j) aug[col][j] *= inv;
        for (size_t i = 0; i < N; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (size_t j = col; j <= N; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    std::vector<Rational> x(N);
    for (size_t i = 0; i < N; ++i) x[i] = aug[i][N];
    return x;
}

}  // namespace

TEST_CASE("Wg equals the Gram-matrix inverse for n <= 3, d >= n") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = n; d <= n + 1; ++d) {
            auto oracle = gram_inverse_column(n, d);
            auto perms = all_permutations(n);
            const WeingartenTable& wg = WeingartenTable::get(n, d);
            for (size_t i = 0; i < perms.size(); ++i) CHECK(wg.value(perms[i]) == oracle[i]);
        }
    }
}

TEST_CASE("Wg is a class function with the canonical table order") {
    const WeingartenTable& wg = WeingartenTable::get(4, 3);
    for (const auto& sigma : all_permutations(4))
        CHECK(wg.value(sigma) == wg.value(sigma.cycle_type()));
    CHECK(wg.cycle_types().size() == 5);
}
