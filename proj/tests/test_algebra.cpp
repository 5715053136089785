#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfre/algebra.hpp"

#include <vector>

using bfre::Scalar;

namespace {

std::vector<Scalar> grid(long q) {
    std::vector<Scalar> out;
    for (long v = 0; v <= q; ++v) out.push_back(Scalar::ratio(v, q));
    return out;
}

} // namespace

TEST_CASE("scalar parsing accepts decimal and fraction forms" * doctest::test_suite("algebra")) {
    CHECK(Scalar::parse("0") == Scalar::zero());
    CHECK(Scalar::parse("1") == Scalar::one());
    CHECK(Scalar::parse("0.3") == Scalar::ratio(3, 10));
    CHECK(Scalar::parse("0.25") == Scalar::ratio(1, 4));
    CHECK(Scalar::parse("1.0") == Scalar::one());
    CHECK(Scalar::parse("3/4") == Scalar::ratio(3, 4));
    CHECK(Scalar::parse("2/4") == Scalar::ratio(1, 2));
    CHECK(Scalar::parse("1/3") == Scalar::ratio(1, 3));
    CHECK(Scalar::parse("0.050") == Scalar::ratio(1, 20));
}

TEST_CASE("scalar parsing rejects malformed or out-of-range text" *
          doctest::test_suite("algebra")) {
    CHECK_THROWS_AS(Scalar::parse(""), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse("-0.1"), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse("1.2"), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse("0.1.2"), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse(".5"), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse("5/4"), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse("1e-1"), bfre::ParseError);
    CHECK_THROWS_AS(Scalar::parse("0. 5"), bfre::ParseError);
}

TEST_CASE("scalar serialization prefers terminating decimals" * doctest::test_suite("algebra")) {
    CHECK(Scalar::zero().str() == "0");
    CHECK(Scalar::one().str() == "1");
    CHECK(Scalar::ratio(3, 4).str() == "0.75");
    CHECK(Scalar::ratio(1, 2).str() == "0.5");
    CHECK(Scalar::ratio(7, 20).str() == "0.35");
    CHECK(Scalar::ratio(1, 8).str() == "0.125");
    CHECK(Scalar::ratio(3, 1000).str() == "0.003");
    CHECK(Scalar::ratio(1, 64).str() == "0.015625");
    CHECK(Scalar::ratio(1, 3).str() == "1/3");
    CHECK(Scalar::ratio(5, 7).str() == "5/7");
    CHECK(Scalar::ratio(21, 90).str() == "7/30");
}

TEST_CASE("scalar serialization round-trips through parse" * doctest::test_suite("algebra")) {
    for (long den : {1L, 2L, 3L, 7L, 10L, 20L, 36L, 100L})
        for (long num = 0; num <= den; ++num) {
            Scalar v = Scalar::ratio(num, den);
            CHECK(Scalar::parse(v.str()) == v);
        }
}

TEST_CASE("product t-norm laws hold exactly on the q=20 grid" * doctest::test_suite("algebra")) {
    const auto g = grid(20);

    SUBCASE("commutativity and unit") {
        for (const Scalar& x : g)
            for (const Scalar& y : g) {
                CHECK(tnorm(x, y) == tnorm(y, x));
                CHECK(tnorm(x, Scalar::one()) == x);
                CHECK(tnorm(x, Scalar::zero()) == Scalar::zero());
            }
    }

    SUBCASE("associativity") {
        const auto h = grid(6);
        for (const Scalar& x : h)
            for (const Scalar& y : h)
                for (const Scalar& z : h) CHECK(tnorm(tnorm(x, y), z) == tnorm(x, tnorm(y, z)));
    }

    SUBCASE("monotonicity in both arguments") {
        for (const Scalar& x : g)
            for (const Scalar& y : g)
                for (const Scalar& z : g) {
                    if (y <= z) {
                        CHECK(tnorm(x, y) <= tnorm(x, z));
                        CHECK(tnorm(y, x) <= tnorm(z, x));
                    }
                }
    }
}

TEST_CASE("negation is the product negation" * doctest::test_suite("algebra")) {
    CHECK(negation(Scalar::zero()) == Scalar::one());
    CHECK(negation(Scalar::one()) == Scalar::zero());
    CHECK(negation(Scalar::ratio(7, 10)) == Scalar::zero());
    CHECK(negation(Scalar::ratio(1, 1000000)) == Scalar::zero());
}

TEST_CASE("residuum closed forms" * doctest::test_suite("algebra")) {
    using bfre::residuum;
    CHECK(residuum(Scalar::ratio(3, 10), Scalar::ratio(4, 10)) == Scalar::ratio(3, 4));
    CHECK(residuum(Scalar::ratio(5, 10), Scalar::ratio(2, 10)) == Scalar::one());
    CHECK(residuum(Scalar::ratio(3, 10), Scalar::zero()) == Scalar::one());
    CHECK(residuum(Scalar::zero(), Scalar::zero()) == Scalar::one());
    CHECK(residuum(Scalar::zero(), Scalar::ratio(4, 10)) == Scalar::zero());
    CHECK(residuum(Scalar::one(), Scalar::one()) == Scalar::one());
}

TEST_CASE("residuum is adjoint to the t-norm on all q=20 triples" *
          doctest::test_suite("algebra")) {
    const auto g = grid(20);
    for (const Scalar& x : g)
        for (const Scalar& y : g)
            for (const Scalar& z : g) {
                const bool left = tnorm(x, y) <= z;
                const bool right = y <= residuum(z, x);
                CHECK(left == right);
            }
}

TEST_CASE("residuum monotonicity directions" * doctest::test_suite("algebra")) {
    const auto g = grid(20);
    using bfre::residuum;
    for (const Scalar& x : g)
        for (const Scalar& z1 : g)
            for (const Scalar& z2 : g)
                if (z1 <= z2) CHECK(residuum(z1, x) <= residuum(z2, x));
    for (const Scalar& z : g)
        for (const Scalar& x1 : g)
            for (const Scalar& x2 : g)
                if (x1 <= x2) CHECK(residuum(z, x2) <= residuum(z, x1));
}

TEST_CASE("halving stays inside the interval and descends" * doctest::test_suite("algebra")) {
    Scalar v = Scalar::one();
    for (int i = 0; i < 80; ++i) {
        Scalar next = v.half();
        CHECK(next < v);
        CHECK(Scalar::zero() < next);
        v = next;
    }
    CHECK(Scalar::zero().half() == Scalar::zero());
}
