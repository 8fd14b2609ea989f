#include <doctest.h>

#include "bireg/error.hpp"
#include "bireg/json_io.hpp"
#include "bireg/mvpoly.hpp"
#include "test_util.hpp"

using namespace bireg;

TEST_CASE("variables are scalar and commute with coefficients")
{
    int m = 3;
    auto x0 = CliffPoly::variable(m, {Block::X, 0});
    auto e1 = CliffPoly::constant(m, Multivector::unit(m, 1));
    CHECK(x0 * e1 == e1 * x0);

    auto e1x1 = CliffPoly::constant(m, Multivector::unit(m, 1)) * CliffPoly::variable(m, {Block::X, 1});
    auto e2x2 = CliffPoly::constant(m, Multivector::unit(m, 2)) * CliffPoly::variable(m, {Block::X, 2});
    auto e1e2 = Multivector::unit(m, 1) * Multivector::unit(m, 2);
    auto x1x2 = CliffPoly::variable(m, {Block::X, 1}) * CliffPoly::variable(m, {Block::X, 2});
    CHECK(e1x1 * e2x2 == x1x2.mul_multivector(e1e2, Side::Left));
    CHECK(e2x2 * e1x1 == -(x1x2.mul_multivector(e1e2, Side::Left)));
}

TEST_CASE("partial derivatives")
{
    int m = 3;
    auto x1 = CliffPoly::variable(m, {Block::X, 1});
    auto e1 = CliffPoly::constant(m, Multivector::unit(m, 1));
    CHECK(partial(x1 * x1 * e1, {Block::X, 1}) == Rational(2) * (x1 * e1));
    CHECK(partial(CliffPoly::variable(m, {Block::X, 0}), {Block::Y, 0}).is_zero());

    auto e1e2 = CliffPoly::constant(m, Multivector::unit(m, 1) * Multivector::unit(m, 2));
    auto x2 = CliffPoly::variable(m, {Block::X, 2});
    CHECK(partial(x1 * x2 * e1e2, {Block::X, 1}) == x2 * e1e2);
}

TEST_CASE("Cauchy-Riemann operator on paravectors")
{
    int m = 3;
    auto x = CliffPoly::paravector(m, Block::X);
    CHECK(apply_cr(x, {Block::X, Side::Left, true}) == CliffPoly::constant(m, Rational(-2)));

    auto xbar = CliffPoly::variable(m, {Block::X, 0}) - CliffPoly::vector_variable(m, Block::X);
    CHECK(apply_cr(xbar, {Block::X, Side::Left, true}) == CliffPoly::constant(m, Rational(4)));

    CHECK(apply_cr(CliffPoly::constant(m, Rational(5)), {Block::X, Side::Left, true}).is_zero());
}

TEST_CASE("laplacian examples")
{
    int m = 3;
    auto x = CliffPoly::paravector(m, Block::X);
    CHECK(laplacian(x * x, Block::X) == CliffPoly::constant(m, Rational(-4)));

    CliffPoly sumsq(m);
    for (int j = 0; j <= m; ++j) {
        auto xj = CliffPoly::variable(m, {Block::X, j});
        sumsq = sumsq + xj * xj;
    }
    CHECK(laplacian(sumsq, Block::X) == CliffPoly::constant(m, Rational(8)));

    auto x0 = CliffPoly::variable(m, {Block::X, 0});
    CHECK(laplacian(x0 * x0 * x0, Block::Y).is_zero());
    CHECK(laplacian_power(x, Block::X, 0) == x);
}

TEST_CASE("biregular residuals")
{
    int m = 3;
    auto one = CliffPoly::constant(m, Rational(1));
    auto [r1, r2] = biregular_residuals(one);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());

    auto p = CliffPoly::variable(m, {Block::X, 0}) + CliffPoly::vector_variable(m, Block::X) * Rational(1, 3);
    auto [s1, s2] = biregular_residuals(p);
    CHECK(s1.is_zero());
    CHECK(s2.is_zero());

    auto x = CliffPoly::paravector(m, Block::X);
    auto [t1, t2] = biregular_residuals(x);
    CHECK(t1 == CliffPoly::constant(m, Rational(-2)));
    CHECK(t2.is_zero());
}

TEST_CASE("Laplacian factorization through the CR operators")
{
    testutil::Rng rng(23);
    for (int m : {2, 3})
        for (int i = 0; i < 15; ++i) {
            auto p = testutil::random_poly(rng, m);
            OperatorSpec left{Block::X, Side::Left, true};
            auto lap = laplacian(p, Block::X);
            CHECK(apply_cr(apply_cr_conjugate(p, left), left) == lap);
            CHECK(apply_cr_conjugate(apply_cr(p, left), left) == lap);
        }
}

TEST_CASE("scalar Leibniz rules")
{
    testutil::Rng rng(29);
    for (int m : {2, 3})
        for (int i = 0; i < 15; ++i) {
            auto phi = testutil::random_scalar_poly(rng, m);
            auto g = testutil::random_poly(rng, m);
            OperatorSpec dx{Block::X, Side::Left, false};
            OperatorSpec dy{Block::Y, Side::Right, false};
            CHECK(apply_cr(phi * g, dx) == apply_cr(phi, dx) * g + phi * apply_cr(g, dx));
            CHECK(apply_cr(phi * g, dy) == g * apply_cr(phi, dy) + phi * apply_cr(g, dy));
        }
}

TEST_CASE("vector Leibniz rules")
{
    testutil::Rng rng(31);
    for (int m : {2, 3})
        for (int rep = 0; rep < 15; ++rep) {
            // fvec = sum f_j e_j with scalar-valued f_j
            int mm = m;
            std::vector<CliffPoly> fj;
            CliffPoly fvec(mm);
            for (int j = 1; j <= mm; ++j) {
                auto f = testutil::random_scalar_poly(rng, mm);
                fj.push_back(f);
                fvec = fvec + f.mul_multivector(Multivector::unit(mm, j), Side::Left);
            }
            auto g = testutil::random_poly(rng, mm);
            OperatorSpec dx{Block::X, Side::Left, false};
            OperatorSpec dy{Block::Y, Side::Right, false};

            CliffPoly cross_x(mm);
            for (int j = 1; j <= mm; ++j)
                cross_x = cross_x + fj[j - 1] * partial(g, {Block::X, j});
            CHECK(apply_cr(fvec * g, dx) ==
                  apply_cr(fvec, dx) * g - fvec * apply_cr(g, dx) - Rational(2) * cross_x);

            CliffPoly cross_y(mm);
            for (int j = 1; j <= mm; ++j)
                cross_y = cross_y + fj[j - 1] * partial(g, {Block::Y, j});
            CHECK(apply_cr(g * fvec, dy) ==
                  g * apply_cr(fvec, dy) - apply_cr(g, dy) * fvec - Rational(2) * cross_y);
        }
}

TEST_CASE("mixed-block Laplacians commute")
{
    testutil::Rng rng(37);
    for (int i = 0; i < 10; ++i) {
        auto p = testutil::random_poly(rng, 3);
        CHECK(laplacian(laplacian(p, Block::X), Block::Y) ==
              laplacian(laplacian(p, Block::Y), Block::X));
    }
}

TEST_CASE("json round trip reproduces structural equality")
{
    testutil::Rng rng(41);
    for (int m : {2, 3, 5})
        for (int i = 0; i < 10; ++i) {
            auto p = testutil::random_poly(rng, m);
            CHECK(poly_from_json(poly_to_json(p)) == p);
        }
    CHECK(poly_from_json(poly_to_json(CliffPoly(3))) == CliffPoly(3));
}

TEST_CASE("context mismatch across polynomials is rejected")
{
    CHECK_THROWS_AS(CliffPoly::constant(2, Rational(1)) * CliffPoly::constant(3, Rational(1)), Error);
}
