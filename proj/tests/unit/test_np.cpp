#include "support.hpp"

#include <doctest.h>
#include <molly/error.hpp>
#include <molly/np.hpp>

using namespace molly;
using molly::test::mono;
using molly::test::weights;

TEST_CASE("np and npinf on the intro series")
{
    const FiberSeries h = molly::test::intro_series(3);
    const ToricValuation v = weights({"9", "3"});
    CHECK(np(h, v) == Rational(-9));
    CHECK(npinf(h, v) == Rational(-6));
    CHECK_FALSE(is_weakly_admissible(h, v));
    const SymbolPart sym = symbol(h, v);
    CHECK(sym.level == Rational(-9));
    REQUIRE(sym.terms.size() == 1);
    CHECK(sym.terms.begin()->first == FiberIndex{3});
    CHECK_FALSE(is_separable_symbol(sym));
}

TEST_CASE("np edge cases")
{
    FiberSeries integral(3, 2, 1, 5);
    integral.add({1}, mono(3, {"1", "0"}));
    integral.add({0}, mono(3, {"-4", "0"}));
    const ToricValuation v = weights({"1", "2"});
    CHECK(np(integral, v) == Rational(0));
    CHECK(npinf(integral, v) == Rational(0));
    CHECK(np(FiberSeries(3, 2, 1, 5), v) == Rational(0));
    CHECK_THROWS_WITH_AS(symbol(integral, v), doctest::Contains("NonNegativeNP"), Error);

    // (1/s) sum_{l <= D} x^l: every coefficient has value -v(s).
    FiberSeries geometric(1, 9, mono(2, {"1"}));
    for (std::int64_t l = 0; l <= 9; ++l) {
        geometric.add({l}, mono(2, {"0"}));
    }
    const ToricValuation a = weights({"5/2"});
    CHECK(np(geometric, a) == Rational(-5, 2));

    // x^2 / s with p = 2, v(s) = 1.
    FiberSeries sq(1, 2, mono(2, {"1"}));
    sq.add({2}, mono(2, {"0"}));
    CHECK(np(sq, weights({"1"})) == Rational(-1));
    CHECK(npinf(sq, weights({"1"})) == Rational(-1, 2));
}

TEST_CASE("separable symbols")
{
    SymbolPart sym{3, Rational(-1), {}};
    sym.terms.emplace(FiberIndex{1}, mono(3, {"-1"}));
    CHECK(is_separable_symbol(sym));
    sym.terms.clear();
    sym.terms.emplace(FiberIndex{3}, mono(3, {"-1"}));
    CHECK_FALSE(is_separable_symbol(sym));
}

TEST_CASE("unit rescaling leaves np and npinf unchanged")
{
    const FiberSeries h = molly::test::intro_series(3);
    // u = s t^{-3} has value 0 at (9, 3).
    const PuiseuxPoly u = mono(3, {"1", "-3"});
    FiberSeries scaled(1, 3, h.pi());
    for (const auto &[k, c] : h.coeffs()) {
        scaled.add(k, c * u);
    }
    const ToricValuation v = weights({"9", "3"});
    CHECK(np(scaled, v) == np(h, v));
    CHECK(npinf(scaled, v) == npinf(h, v));
}
