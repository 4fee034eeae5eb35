#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twistgen/surface.hpp"

using namespace twistgen;

TEST_CASE("surface parameters and genus guard") {
    auto sp = SurfaceParams::for_genus(12);
    CHECK(sp.even);
    CHECK(sp.r == 5);
    CHECK_FALSE(sp.k.has_value());
    auto sp13 = SurfaceParams::for_genus(13);
    CHECK_FALSE(sp13.even);
    CHECK(sp13.r == 6);
    CHECK(sp13.k.value() == 3);
    auto sp11 = SurfaceParams::for_genus(11);
    CHECK(sp11.k.value() == 2);
    CHECK_THROWS_AS(SurfaceParams::for_genus(4), genus_error);
    CHECK_THROWS_AS(SurfaceParams::for_genus(0), genus_error);
}

TEST_CASE("dimensions per coefficient system") {
    auto g12 = SurfaceParams::for_genus(12);
    CHECK(dim(g12, Coeff::rational()) == 11);
    CHECK(dim(g12, Coeff::f2()) == 12);
    auto g5 = SurfaceParams::for_genus(5);
    CHECK(dim(g5, Coeff::fp(3)) == 4);
    CHECK_THROWS_AS(Coeff::fp(4), invariant_error);
    CHECK_THROWS_AS(Coeff::fp(11), invariant_error);
}

TEST_CASE("reduction under the crosscap relation") {
    int g = 6;
    Lift eg = basis_class(g, g);
    auto red = reduce_rational(eg);
    REQUIRE(red.size() == 5);
    for (auto v : red) CHECK(v == -1);

    Lift v(static_cast<std::size_t>(g), 0);
    v[0] = 1;
    v[1] = 1;
    CHECK(reduce_f2(v) == 0b11);

    Lift two(static_cast<std::size_t>(g), 0);
    two[0] = 2;
    CHECK(reduce_f2(two) == 0);

    auto w = characteristic_class(SurfaceParams::for_genus(6));
    CHECK(w == Lift{1, 1, 1, 1, 1, 1});
    auto wr = reduce_rational(w);
    for (auto x : wr) CHECK(x == 0);
    for (int p : {3, 5, 7}) {
        auto wp = reduce_fp(w, p);
        for (auto x : wp) CHECK(x == 0);
    }
    CHECK(reduce_f2(w) == 0b111111);
}

TEST_CASE("mod-2 pairing has the identity Gram matrix") {
    int g = 7;
    auto x1 = basis_class(1, g), x2 = basis_class(2, g);
    CHECK(mod2_pairing(x1, x1) == 1);
    CHECK(mod2_pairing(x1, x2) == 0);
    Lift s(static_cast<std::size_t>(g), 0);
    s[0] = s[1] = 1;
    CHECK(mod2_pairing(s, s) == 0);
    auto w = characteristic_class(SurfaceParams::for_genus(g));
    for (int i = 1; i <= g; ++i) CHECK(mod2_pairing(w, basis_class(i, g)) == 1);
}

TEST_CASE("reduction is linear and pairing is symmetric bilinear") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    int g = 9;
    for (int trial = 0; trial < 200; ++trial) {
        Lift a(static_cast<std::size_t>(g)), b(static_cast<std::size_t>(g));
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        Lift sum(static_cast<std::size_t>(g));
        for (int i = 0; i < g; ++i) sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
        auto ra = reduce_rational(a), rb = reduce_rational(b), rs = reduce_rational(sum);
        for (int i = 0; i + 1 < g; ++i)
            CHECK(rs[static_cast<std::size_t>(i)] == ra[static_cast<std::size_t>(i)] + rb[static_cast<std::size_t>(i)]);
        CHECK((reduce_f2(sum)) == (reduce_f2(a) ^ reduce_f2(b)));
        CHECK(mod2_pairing(a, b) == mod2_pairing(b, a));
        CHECK(mod2_pairing(a, a) == f2_weight(a) % 2);
    }
}
