#include <doctest.h>

#include "bireg/clifford.hpp"
#include "bireg/error.hpp"
#include "test_util.hpp"

using namespace bireg;

TEST_CASE("generator relations")
{
    int m = 3;
    auto e1 = Multivector::unit(m, 1);
    CHECK(e1 * e1 == Multivector::scalar(m, -1));

    auto e1e2 = Multivector::unit(m, 1) * Multivector::unit(m, 2);
    CHECK(e1e2 * e1e2 == Multivector::scalar(m, -1));

    // e_j e_k + e_k e_j = -2 delta_jk
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            auto ej = Multivector::unit(m, j);
            auto ek = Multivector::unit(m, k);
            auto anti = ej * ek + ek * ej;
            CHECK(anti == Multivector::scalar(m, j == k ? -2 : 0));
        }
}

TEST_CASE("unit element")
{
    testutil::Rng rng(7);
    auto one = Multivector::scalar(3, 1);
    for (int i = 0; i < 20; ++i) {
        auto a = testutil::random_multivector(rng, 3);
        CHECK(one * a == a);
        CHECK(a * one == a);
    }
}

TEST_CASE("conjugation")
{
    int m = 3;
    CHECK(Multivector::unit(m, 1).conjugate() == -Multivector::unit(m, 1));
    CHECK(Multivector::scalar(m, 1).conjugate() == Multivector::scalar(m, 1));
    auto e1e2 = Multivector::unit(m, 1) * Multivector::unit(m, 2);
    CHECK(e1e2.conjugate() == -e1e2);
}

TEST_CASE("add, negate, scalar_mul normal form")
{
    int m = 3;
    auto e1 = Multivector::unit(m, 1);
    CHECK((e1 + (-e1)).is_zero());
    auto e1e2 = Multivector::unit(m, 1) * Multivector::unit(m, 2);
    auto s = e1e2 * Rational(3, 2);
    CHECK(s.terms().size() == 1);
    CHECK(s.coefficient(0b11) == Rational(3, 2));
    auto sum = e1 + Multivector::unit(m, 2);
    CHECK(sum.terms().size() == 2);
}

TEST_CASE("associativity on random multivectors")
{
    testutil::Rng rng(11);
    for (int m : {2, 3, 5})
        for (int i = 0; i < 30; ++i) {
            auto a = testutil::random_multivector(rng, m);
            auto b = testutil::random_multivector(rng, m);
            auto c = testutil::random_multivector(rng, m);
            CHECK((a * b) * c == a * (b * c));
        }
}

TEST_CASE("conjugation is an anti-automorphism and involution")
{
    testutil::Rng rng(13);
    for (int m : {2, 3, 4})
        for (int i = 0; i < 30; ++i) {
            auto a = testutil::random_multivector(rng, m);
            auto b = testutil::random_multivector(rng, m);
            CHECK((a * b).conjugate() == b.conjugate() * a.conjugate());
            CHECK(a.conjugate().conjugate() == a);
        }
}

TEST_CASE("paravector norm")
{
    testutil::Rng rng(17);
    for (int m : {1, 3, 5})
        for (int i = 0; i < 20; ++i) {
            std::vector<Rational> coords;
            auto x = Multivector(m);
            Rational norm2 = 0;
            for (int j = 0; j <= m; ++j) {
                Rational c = testutil::random_rational(rng);
                x.accumulate(j == 0 ? 0 : BladeMask(1) << (j - 1), c);
                norm2 += c * c;
            }
            CHECK(x * x.conjugate() == Multivector::scalar(m, norm2));
        }
}

TEST_CASE("context mismatch is rejected")
{
    auto a = Multivector::unit(2, 1);
    auto b = Multivector::unit(3, 1);
    CHECK_THROWS_AS(a * b, Error);
    CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("blade keys")
{
    CHECK(blade_key(0) == "1");
    CHECK(blade_key(0b101) == "e13");
    CHECK(parse_blade_key("e13", 3) == 0b101);
    CHECK(parse_blade_key("1", 3) == 0);
    CHECK_THROWS_AS(parse_blade_key("e31", 3), Error);
    CHECK_THROWS_AS(parse_blade_key("e4", 3), Error);
}
