#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twistgen/words.hpp"

using namespace twistgen;

TEST_CASE("parsing and free reduction") {
    Word w = parse_word("rho1*A1*B2*C4*A3");
    CHECK(w.factors.size() == 5);
    CHECK(w.factors[0].gen == "rho1");
    CHECK(w.factors[4].gen == "A3");

    CHECK(parse_word("A1*A1^-1").empty());
    CHECK(parse_word("A1 * A1 ^ -1").empty());
    CHECK(parse_word("A1^2*A1^-1") == parse_word("A1"));
    CHECK(parse_word("(A1*B2)*C1") == parse_word("A1*B2*C1"));

    CHECK_THROWS_AS(parse_word("A1^0"), parse_error);
    CHECK_THROWS_AS(parse_word("A1**B2"), parse_error);
    CHECK_THROWS_AS(parse_word("(A1*B2"), parse_error);
    CHECK_THROWS_AS(parse_word("A1*"), parse_error);
    CHECK_THROWS_AS(parse_word("1A"), parse_error);
    try {
        parse_word("A1*@");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.column == 4);
    }
}

TEST_CASE("word algebra") {
    Word u = parse_word("A1*B2");
    CHECK(print_word(inverse(u)) == "B2^-1*A1^-1");
    CHECK(multiply(u, inverse(u)).empty());
    CHECK(print_word(multiply(u, parse_word("B2^-1"))) == "A1");
    Word c = conjugate(parse_word("E1"), parse_word("R"));
    CHECK(print_word(c) == "R*E1*R^-1");
    CHECK(word_power(parse_word("A1"), 3) == parse_word("A1^3"));
    CHECK(word_power(u, -1) == inverse(u));
    CHECK(print_word(Word{}) == "1");
}

TEST_CASE("macro expansion and cycle detection") {
    MacroTable t;
    t.defs["R"] = parse_word("rho2*rho1");
    t.defs["E1"] = parse_word("A1*B2*C4*A3");
    Word w = parse_word("R", t);
    CHECK(print_word(w) == "rho2*rho1");
    Word e2 = parse_word("R*E1*R^-1", t);
    CHECK(e2.factors.size() == 2 + 4 + 2);
    CHECK(print_word(parse_word("R^-1", t)) == "rho1^-1*rho2^-1");

    MacroTable cyc;
    cyc.defs["P"] = parse_word("Q");
    cyc.defs["Q"] = parse_word("P");
    CHECK_THROWS_AS(parse_word("P", cyc), error);
}

TEST_CASE("builtin macro tables") {
    auto g12 = builtin_macros("g12", SurfaceParams::for_genus(12));
    CHECK(print_word(g12.defs.at("E1")) == "A1*B2*C4*A3");
    CHECK(print_word(g12.defs.at("R")) == "rho2*rho1");

    auto h14 = builtin_macros("r-even", SurfaceParams::for_genus(14));
    CHECK(print_word(h14.defs.at("H1")) == "A2*C3*B5*C6");

    CHECK_THROWS_AS(builtin_macros("r-odd", SurfaceParams::for_genus(12)), applicability_error);
    CHECK_THROWS_AS(builtin_macros("g12", SurfaceParams::for_genus(10)), applicability_error);
    CHECK_THROWS_AS(builtin_macros("nope", SurfaceParams::for_genus(12)), unknown_name_error);

    auto g5 = builtin_macros("g5g9", SurfaceParams::for_genus(5));
    CHECK(print_word(g5.defs.at("S")) == "B2*C1*B1*A1");
    auto g9 = builtin_macros("g5g9", SurfaceParams::for_genus(9));
    CHECK(print_word(g9.defs.at("S")) == "B4*C3*B3*C2*B2*C1*B1*A1");
}

TEST_CASE("free reduction is confluent on random words") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(0, 4), ex(-3, 3);
    const char* names[] = {"A1", "B1", "rho1", "C2", "E"};
    auto random_word = [&]() {
        std::vector<Factor> fs;
        int len = pick(rng) + 1;
        for (int i = 0; i < len; ++i) {
            int e = ex(rng);
            if (e == 0) e = 1;
            fs.push_back({names[pick(rng)], e});
        }
        return reduce_word(fs);
    };
    for (int trial = 0; trial < 300; ++trial) {
        Word u = random_word(), v = random_word(), w = random_word();
        CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
        CHECK(inverse(inverse(u)) == u);
        CHECK(multiply(u, inverse(u)).empty());
        if (!u.empty()) CHECK(parse_word(print_word(u)) == u);
    }
}
