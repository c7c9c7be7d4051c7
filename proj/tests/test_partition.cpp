#include <doctest.h>

#include "wordmom/partition.hpp"
#include "wordmom/permutation.hpp"

using namespace wordmom;

TEST_CASE("enumerate_partitions counts and order") {
    int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n)
        CHECK(enumerate_partitions(n).size() == static_cast<size_t>(expected[n]));
    auto p4 = enumerate_partitions(4);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    CHECK(enumerate_partitions(4, 2).size() == 3);  // (4), (3,1), (2,2)
}

TEST_CASE("conjugate") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
}

TEST_CASE("dimensions: sum of squares equals n!") {
    for (int n = 1; n <= 8; ++n) {
        Integer total = 0;
        for (const auto& lambda : enumerate_partitions(n)) {
            Integer dim = symmetric_group_dimension(lambda);
            total += dim * dim;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("hook products") {
    CHECK(hook_product(Partition({2, 1})) == 3);   // hooks 3,1,1
    CHECK(hook_product(Partition({3})) == 6);
    CHECK(symmetric_group_dimension(Partition({2, 1})) == 2);
}

TEST_CASE("Stirling numbers against direct cycle counting") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Integer> counts(n + 1, 0);
        for (const auto& p : all_permutations(n)) ++counts[p.num_cycles()];
        for (int k = 0; k <= n; ++k) CHECK(stirling_unsigned(n, k) == counts[k]);
    }
}

TEST_CASE("centralizer orders partition n! over classes") {
    for (int n = 1; n <= 8; ++n) {
        Rational total = 0;
        for (const auto& mu : enumerate_partitions(n))
            total += Rational(factorial(n)) / Rational(centralizer_order(mu));
        CHECK(total == Rational(factorial(n)));
    }
}

TEST_CASE("multiplicity vector") {
    auto mv = multiplicity_vector(Partition({3, 1, 1}), 5);
    CHECK(mv == std::vector<int>{2, 0, 1, 0, 0});
}

TEST_CASE("Littlewood-Richardson basics") {
    // Pieri rule: c^nu_{lambda,(k)} is 0/1 (horizontal strips).
    Partition lambda({2, 1});
    for (const auto& nu : enumerate_partitions(5)) {
        Integer c = lr_coefficient(lambda, Partition({2}), nu);
        CHECK(c >= 0);
        CHECK(c <= 1);
    }
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
    // Dimension expansion: sum_nu c^nu dim_S(nu) * C(|lambda|+|mu|, |lambda|)
    // consistency: dim(lambda)*dim(mu)*C = sum_nu c^nu dim(nu).
    Partition mu({2});
    Integer lhs = symmetric_group_dimension(lambda) * symmetric_group_dimension(mu) *
                  binomial(5u, 3u);
    Integer rhs = 0;
    for (const auto& nu : enumerate_partitions(5))
        rhs += lr_coefficient(lambda, mu, nu) * symmetric_group_dimension(nu);
    CHECK(lhs == rhs);
}

TEST_CASE("permutation algebra") {
    Permutation a({1, 2, 0});  // 3-cycle
    Permutation b({1, 0, 2});  // transposition
    CHECK((a * b)(0) == a(b(0)));
    CHECK((a * a.inverse()) == Permutation::identity(3));
    CHECK(a.cycle_type() == Partition({3}));
    CHECK(b.cycle_type() == Partition({2, 1}));
    CHECK(a.sign() == 1);
    CHECK(b.sign() == -1);
    CHECK(all_permutations(4).size() == 24);
}
