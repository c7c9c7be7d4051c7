#include <doctest.h>

#include <stdexcept>

#include "wordmom/engine.hpp"
#include "wordmom/word.hpp"

using namespace wordmom;

TEST_CASE("build_problem scaffolding") {
    auto p = build_problem({parse_word("[x,y]")}, 3);
    CHECK(p.omega_size() == 4);
    CHECK(p.balanced);
    CHECK(p.generators == std::vector<int>{1, 2});
    CHECK(p.a_positions[0].size() == 1);
    CHECK(p.b_positions[0].size() == 1);
    CHECK(p.t_successor[3] == 0);
    CHECK_THROWS_AS(build_problem({Word()}, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_problem({parse_word("Yxy")}, 2), std::invalid_argument);
}

TEST_CASE("unbalanced words integrate to zero") {
    CHECK(expected_trace_product({parse_word("x")}, 3) == 0);
    CHECK(expected_trace_product({parse_word("xy")}, 3) == 0);
    CHECK(expected_trace_product({parse_word("x^3"), parse_word("X")}, 2) == 0);
}

TEST_CASE("commutator trace is 1/d") {
    for (int d = 1; d <= 5; ++d)
        CHECK(expected_trace_product({parse_word("[x,y]")}, d) == Rational(1, d));
}

TEST_CASE("single-generator DS anchor: E|tr X|^2 = 1, E tr(X) tr(X^-1) likewise") {
    for (int d = 1; d <= 5; ++d)
        CHECK(expected_trace_product({parse_word("x"), parse_word("X")}, d) == 1);
    // E tr(X^2) tr(X^-2) = 2 for d >= 2.
    for (int d = 2; d <= 5; ++d)
        CHECK(expected_trace_product({parse_word("x^2"), parse_word("x^-2")}, d) == 2);
    CHECK(expected_trace_product({parse_word("x^2"), parse_word("x^-2")}, 1) == 1);
}

TEST_CASE("engine equals the entrywise oracle") {
    std::vector<std::vector<Word>> problems = {
        {parse_word("[x,y]")},
        {parse_word("x"), parse_word("X")},
        {parse_word("xy"), parse_word("YX")},
        {parse_word("x^2"), parse_word("x^-2")},
        {parse_word("xY"), parse_word("yX")},
        {parse_word("x"), parse_word("x"), parse_word("x^-2")},
        {parse_word("[x,y]"), parse_word("x"), parse_word("X")},
    };
    for (const auto& words : problems)
        for (int d = 1; d <= 3; ++d)
            CHECK(expected_trace_product(words, d) ==
                  expected_trace_product_entrywise(words, d));
}

TEST_CASE("cyclic rotation and conjugation invariance") {
    Word w = parse_word("xyXy");
    Rational base = expected_trace_product({w, w.inverse()}, 3);
    for (int k = 1; k < w.length(); ++k) {
        Word rot = cyclic_rotate(w, k);
        CHECK(expected_trace_product({rot, rot.inverse()}, 3) == base);
    }
    Word conj = cyclic_reduce(parse_word("z") * w * parse_word("Z"));
    CHECK(expected_trace_product({conj, conj.inverse()}, 3) == base);
}

TEST_CASE("generator relabeling invariance") {
    Word w1 = parse_word("[x,y]");
    Word w2 = parse_word("[y,x]");  // swapped roles
    Word w3 = parse_word("[z,a]");  // fresh labels
    for (int d = 2; d <= 3; ++d) {
        Rational base = expected_trace_product({w1}, d);
        CHECK(expected_trace_product({w2}, d) == base);
        CHECK(expected_trace_product({w3}, d) == base);
    }
}

TEST_CASE("independent traces multiply") {
    // tr[x,y] and tr[z,a] use disjoint generators: expectation factorizes.
    Word c1 = parse_word("[x,y]");
    Word c2 = parse_word("[z,a]");
    for (int d = 2; d <= 3; ++d)
        CHECK(expected_trace_product({c1, c2}, d) == Rational(1, d) * Rational(1, d));
}

TEST_CASE("thread count does not change the exact result") {
    Word w = parse_word("[x,y]");
    RunConfig one, four;
    one.threads = 1;
    four.threads = 4;
    CHECK(expected_trace_product({w, w.inverse()}, 3, one) ==
          expected_trace_product({w, w.inverse()}, 3, four));
}

TEST_CASE("budget error carries the required term count") {
    RunConfig tiny;
    tiny.term_budget = 1e4;
    Word w = parse_word("x^5");
    std::vector<Word> words = {w, w, w.inverse(), w.inverse()};  // |A| = 10
    CHECK_THROWS_AS(expected_trace_product(words, 3, tiny), BudgetError);
    try {
        expected_trace_product(words, 3, tiny);
    } catch (const BudgetError& e) {
        CHECK(e.required_terms() > 1e4);
    }
}

TEST_CASE("entrywise oracle building blocks") {
    // E X_{00} conj X_{00} = 1/d.
    for (int d = 1; d <= 4; ++d) {
        EntrySpec spec;
        spec.d = d;
        spec.factors = {{1, 0, 0, false}, {1, 0, 0, true}};
        CHECK(expected_entry_product(spec) == Rational(1, d));
    }
    // Mismatched counts integrate to zero.
    EntrySpec odd;
    odd.d = 2;
    odd.factors = {{1, 0, 0, false}};
    CHECK(expected_entry_product(odd) == 0);
    // E |X_{00}|^2 |X_{01}|^2 = 1/(d(d+1)) for row-repeated entries.
    for (int d = 2; d <= 4; ++d) {
        EntrySpec spec;
        spec.d = d;
        spec.factors = {{1, 0, 0, false}, {1, 0, 1, false}, {1, 0, 0, true}, {1, 0, 1, true}};
        CHECK(expected_entry_product(spec) == Rational(1, d) * Rational(1, d + 1));
    }
}
