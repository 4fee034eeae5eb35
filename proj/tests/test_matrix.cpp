#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twistgen/matrix.hpp"

using namespace twistgen;

TEST_CASE("integer matrix product and determinant") {
    IntMat a(3);
    // column convention: columns are basis images
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 0;
    a(1, 0) = 0; a(1, 1) = 1; a(1, 2) = 0;
    a(2, 0) = 0; a(2, 1) = 0; a(2, 2) = 1;
    CHECK(det_bareiss(a) == 1);
    IntMat b = a.mul(a);
    CHECK(b(0, 1) == 4);
    CHECK(a.pow(0).is_identity());
    CHECK(a.pow(3)(0, 1) == 6);

    IntMat s(2);
    s(0, 0) = 0; s(0, 1) = 1;
    s(1, 0) = 1; s(1, 1) = 0;
    CHECK(det_bareiss(s) == -1);

    IntMat z(2);
    CHECK(det_bareiss(z) == 0);
}

TEST_CASE("determinant agrees with cofactor expansion on random samples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-3, 3);
    // independent oracle: recursive cofactor expansion
    auto cofactor_det = [](auto&& self, const IntMat& m) -> Int {
        if (m.n == 1) return m(0, 0);
        Int total = 0;
        for (int j = 0; j < m.n; ++j) {
            if (m(0, j) == 0) continue;
            IntMat sub(m.n - 1);
            for (int i = 1; i < m.n; ++i) {
                int cc = 0;
                for (int k = 0; k < m.n; ++k) {
                    if (k == j) continue;
                    sub(i - 1, cc++) = m(i, k);
                }
            }
            Int term = m(0, j) * self(self, sub);
            total += (j % 2 == 0) ? term : -term;
        }
        return total;
    };
    for (int trial = 0; trial < 50; ++trial) {
        IntMat m(4);
        for (auto& x : m.a) x = d(rng);
        CHECK(det_bareiss(m) == cofactor_det(cofactor_det, m));
    }
}

TEST_CASE("F2 matrices: apply, multiply, transpose, inverse") {
    F2Mat id = F2Mat::identity(4);
    CHECK(id.is_identity());
    F2Mat m(4);
    // columns: e1->e2, e2->e1+e2, e3->e4, e4->e3
    m.cols[0] = 0b0010;
    m.cols[1] = 0b0011;
    m.cols[2] = 0b1000;
    m.cols[3] = 0b0100;
    CHECK(m.invertible());
    F2Mat inv = m.inverse();
    CHECK(m.mul(inv).is_identity());
    CHECK(inv.mul(m).is_identity());
    CHECK(m.apply(0b0001) == 0b0010);
    F2Mat t = m.transpose();
    CHECK(t.transpose() == m);

    F2Mat sing(2);
    sing.cols[0] = 0b11;
    sing.cols[1] = 0b11;
    CHECK_FALSE(sing.invertible());
    CHECK_THROWS_AS(sing.inverse(), invariant_error);
}

TEST_CASE("Fp matrices: multiply and inverse") {
    for (int p : {3, 5, 7}) {
        std::mt19937_64 rng(static_cast<unsigned>(p));
        std::uniform_int_distribution<int> d(0, p - 1);
        int found = 0;
        while (found < 10) {
            FpMat m(3, p);
            for (auto& x : m.a) x = static_cast<std::uint8_t>(d(rng));
            try {
                FpMat inv = m.inverse();
                CHECK(m.mul(inv).is_identity());
                CHECK(inv.mul(m).is_identity());
                ++found;
            } catch (const invariant_error&) {
                // singular sample; draw again
            }
        }
    }
}
