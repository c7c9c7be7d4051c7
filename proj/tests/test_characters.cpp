#include <doctest.h>

#include "wordmom/characters.hpp"
#include "wordmom/partition.hpp"
#include "wordmom/permutation.hpp"

using namespace wordmom;

TEST_CASE("character table row orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        const CharacterTable& t = CharacterTable::get(n);
        size_t nc = t.partitions().size();
        for (size_t i = 0; i < nc; ++i)
            for (size_t j = i; j < nc; ++j) {
                Integer sum = 0;
                for (size_t c = 0; c < nc; ++c)
                    sum += t.class_size(static_cast<int>(c)) *
                           static_cast<long>(
                               t.value_at(static_cast<int>(i), static_cast<int>(c)) *
                               t.value_at(static_cast<int>(j), static_cast<int>(c)));
                CHECK(sum == (i == j ? factorial(n) : Integer(0)));
            }
    }
}

TEST_CASE("identity column gives the hook-length dimension") {
    for (int n = 1; n <= 7; ++n) {
        const CharacterTable& t = CharacterTable::get(n);
        Partition id_class(std::vector<int>(n, 1));
        for (const auto& lambda : t.partitions())
            CHECK(Integer(static_cast<long>(t.value(lambda, id_class))) ==
                  symmetric_group_dimension(lambda));
    }
}

TEST_CASE("known S_3 character values") {
    const CharacterTable& t = CharacterTable::get(3);
    CHECK(t.value(Partition({3}), Partition({2, 1})) == 1);        // trivial
    CHECK(t.value(Partition({1, 1, 1}), Partition({2, 1})) == -1); // sign
    CHECK(t.value(Partition({2, 1}), Partition({3})) == -1);
    CHECK(t.value(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(t.value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
}

TEST_CASE("sign character is the conjugate-symmetry of the table") {
    // chi_{lambda'}(mu) = sign(mu) chi_lambda(mu).
    for (int n = 2; n <= 6; ++n) {
        const CharacterTable& t = CharacterTable::get(n);
        for (const auto& lambda : t.partitions())
            for (const auto& mu : t.partitions()) {
                int sign = 1;
                for (int part : mu.parts())
                    if (part % 2 == 0) sign = -sign;
                CHECK(t.value(lambda.conjugate(), mu) == sign * t.value(lambda, mu));
            }
    }
}

TEST_CASE("unitary dimensions") {
    for (int d = 1; d <= 6; ++d) {
        CHECK(unitary_dimension(Partition({1}), d) == d);
        CHECK(unitary_dimension(Partition({2}), d) == Integer(d) * (d + 1) / 2);
        CHECK(unitary_dimension(Partition({1, 1}), d) == Integer(d) * (d - 1) / 2);
        CHECK(unitary_dimension(Partition({2, 1}), d) == Integer(d) * (d * d - 1) / 3);
    }
    // ell(lambda) > d has no U(d) irreducible: dimension 0.
    CHECK(unitary_dimension(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("Young subgroup order and elements") {
    YoungSubgroup H{2, 3};
    CHECK(H.order() == 8);
    auto els = H.elements();
    CHECK(els.size() == 8);
    for (const auto& h : els) {
        // Blocks {0,1}, {2,3}, {4,5} are preserved.
        for (int i = 0; i < 6; ++i) CHECK(h(i) / 2 == i / 2);
    }
}

TEST_CASE("induced multiplicities sum to the index") {
    // sum_nu mult(nu) dim(nu) = [S_n : H] for the trivial character.
    for (const auto& [m, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        int n = m * l;
        YoungSubgroup H{m, l};
        Integer total = 0;
        for (const auto& nu : enumerate_partitions(n))
            total += induced_multiplicity(m, l, nu, LinearCharacter::Trivial) *
                     symmetric_group_dimension(nu);
        CHECK(total * H.order() == factorial(n));
    }
}

TEST_CASE("induced multiplicity agrees with a direct sum over H") {
    // Frobenius: <Ind xi, chi_nu> = (1/|H|) sum_h xi(h) chi_nu(h).
    int m = 2, l = 2;
    YoungSubgroup H{m, l};
    const CharacterTable& t = CharacterTable::get(4);
    for (const auto& nu : t.partitions()) {
        for (LinearCharacter xi : {LinearCharacter::Trivial, LinearCharacter::Sign}) {
            Rational direct(0);
            for (const auto& h : H.elements()) {
                int x = xi == LinearCharacter::Sign ? h.sign() : 1;
                direct += Rational(static_cast<long>(x * t.value(nu, h.cycle_type())));
            }
            direct /= Rational(H.order());
            CHECK(direct == Rational(induced_multiplicity(m, l, nu, xi)));
        }
    }
}

TEST_CASE("double cosets partition the group") {
    for (const auto& [m, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        int n = m * l;
        YoungSubgroup H{m, l};
        auto cosets = double_cosets(n, H);
        size_t total = 0;
        for (const auto& c : cosets) total += c.size();
        CHECK(Integer(static_cast<long>(total)) == factorial(n));
    }
}

TEST_CASE("coset average at g = identity is the normalized character sum") {
    YoungSubgroup H{2, 2};
    const CharacterTable& t = CharacterTable::get(4);
    for (const auto& lambda : t.partitions()) {
        Rational avg = coset_average(H, LinearCharacter::Trivial, lambda,
                                     Permutation::identity(4));
        // At g = id the coset average is exactly the induced multiplicity.
        CHECK(avg == Rational(induced_multiplicity(2, 2, lambda, LinearCharacter::Trivial)));
    }
}
