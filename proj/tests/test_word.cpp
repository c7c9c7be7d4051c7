#include <doctest.h>

#include <stdexcept>

#include "wordmom/word.hpp"

using namespace wordmom;

TEST_CASE("free reduction in the constructor") {
    CHECK(Word({1, -1}).empty());
    CHECK(Word({1, 2, -2, -1}).empty());
    CHECK(Word({1, 2, -2, 3}) == Word({1, 3}));
    CHECK(Word({1, 1, -1}) == Word({1}));
}

TEST_CASE("parser grammar") {
    CHECK(parse_word("x") == Word({1}));
    CHECK(parse_word("y") == Word({2}));
    CHECK(parse_word("z") == Word({3}));
    CHECK(parse_word("a") == Word({4}));
    CHECK(parse_word("w") == Word({26}));
    CHECK(parse_word("X") == Word({-1}));
    CHECK(parse_word("x27") == Word({27}));
    CHECK(parse_word("x^3") == Word({1, 1, 1}));
    CHECK(parse_word("x^-2") == Word({-1, -1}));
    CHECK(parse_word("x^0").empty());
    CHECK(parse_word("xy") == Word({1, 2}));
    CHECK(parse_word("[x,y]") == Word({1, 2, -1, -2}));
    CHECK(parse_word("[[x,y],y]") == Word({1, 2, -1, 2, 1, -2, -1, -2}));
    CHECK(parse_word(" x \t y ") == Word({1, 2}));
    CHECK(parse_word("[x,y]^2") == Word({1, 2, -1, -2, 1, 2, -1, -2}));
    CHECK(parse_word("xX").empty());
}

TEST_CASE("parser errors carry a position") {
    CHECK_THROWS_AS(parse_word("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("[x y]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("?"), std::invalid_argument);
}

TEST_CASE("display round-trips through the parser") {
    for (const char* text : {"x", "xyXY", "x^3", "[[x,y],y]", "ab", "x27", "x30Y"}) {
        Word w = parse_word(text);
        CHECK(parse_word(w.display()) == w);
    }
    CHECK(Word().display() == "1");
}

TEST_CASE("inverse and powers") {
    Word w = parse_word("xy");
    CHECK(w.inverse() == parse_word("YX"));
    CHECK((w * w.inverse()).empty());
    CHECK(w.power(3) == parse_word("xyxyxy"));
    CHECK(w.power(0).empty());
}

TEST_CASE("cyclic reduction") {
    CHECK(cyclic_reduce(parse_word("Yxy")) == parse_word("x"));
    CHECK(cyclic_reduce(parse_word("[x,y]")) == parse_word("[x,y]"));
    CHECK(cyclic_reduce(parse_word("x")) == parse_word("x"));
    // g w g^-1 cyclically reduces back to a rotation class of w.
    Word w = parse_word("xyXy");
    Word conj = parse_word("z") * w * parse_word("Z");
    Word reduced = cyclic_reduce(conj);
    bool is_rotation = false;
    for (int k = 0; k < w.length(); ++k)
        if (cyclic_rotate(w, k) == reduced) is_rotation = true;
    CHECK(is_rotation);
}

TEST_CASE("power decomposition") {
    auto pd = power_decomposition(parse_word("xyxyxy"));
    CHECK(pd.base == parse_word("xy"));
    CHECK(pd.exponent == 3);
    auto prim = power_decomposition(parse_word("[x,y]"));
    CHECK(prim.exponent == 1);
    auto sq = power_decomposition(parse_word("x^4"));
    CHECK(sq.base == parse_word("x"));
    CHECK(sq.exponent == 4);
}

TEST_CASE("fresh-letter concatenation") {
    Word w = concatenate_fresh(parse_word("xy"), parse_word("xY"));
    CHECK(w == Word({1, 2, 3, -4}));
}

TEST_CASE("to_json") {
    CHECK(parse_word("[x,y]").to_json() == "[1,2,-1,-2]");
    CHECK(Word().to_json() == "[]");
}
