#include "support.hpp"

#include <doctest.h>
#include <molly/error.hpp>

#include <random>

using namespace molly;
using molly::test::mono;
using molly::test::weights;

TEST_CASE("monomial values")
{
    const ToricValuation v = weights({"4", "3"});
    CHECK(v(mono(5, {"1", "0"})) == Value(4));
    CHECK(v(mono(5, {"0", "1"})) == Value(3));
    CHECK(v(mono(5, {"1", "2"})) == Value(10));
    CHECK(v(PuiseuxPoly(5, 2)).is_infinite());
    CHECK(Value(1000) < Value::infinity());
    CHECK(val_fraction(weights({"9", "3"}), mono(3, {"0", "1"}), mono(3, {"1", "0"})) == Value(-6));
    CHECK_THROWS_WITH_AS((void)v(mono(5, {"1"})), doctest::Contains("DimensionMismatch"), Error);
    CHECK_THROWS_WITH_AS(weights({"1", "0"}), doctest::Contains("NonpositiveWeight"), Error);
    CHECK_THROWS_WITH_AS(val_fraction(v, mono(5, {"1", "0"}), PuiseuxPoly(5, 2)), doctest::Contains("ZeroDenominator"),
                         Error);
}

TEST_CASE("value window examples")
{
    const ToricValuation v = weights({"1", "1"});
    const std::vector<PuiseuxPoly> gens{mono(2, {"1", "0"}), mono(2, {"0", "1"})};
    CHECK(value_window(v, mono(2, {"1", "0"}), gens, 0) == std::vector<Rational>{-1, 0});
    CHECK(value_window(v, mono(2, {"2", "0"}), gens, 0) == std::vector<Rational>{-2, -1, 0});
    const auto deep = value_window(v, mono(2, {"1", "0"}), gens, 1);
    CHECK(std::find(deep.begin(), deep.end(), Rational(-1, 2)) != deep.end());
    CHECK(std::is_sorted(deep.begin(), deep.end()));
    CHECK_THROWS_WITH_AS(value_window(v, mono(2, {"0", "0"}), gens, 0), doctest::Contains("NonpositivePi"), Error);
}

TEST_CASE("value window contains enumerated monomials")
{
    const ToricValuation v = weights({"2/3", "5/4"});
    const std::vector<PuiseuxPoly> gens{mono(3, {"1", "0"}), mono(3, {"0", "1"})};
    const PuiseuxPoly pi = mono(3, {"3", "1"});
    const Rational vpi = v(pi).rational();
    const auto window = value_window(v, pi, gens, 2);
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 3; ++b) {
            const Rational w = Rational(a) * Rational(2, 3) + Rational(b) * Rational(5, 4);
            for (int k = 0; k <= 2; ++k) {
                const Rational value = (w - vpi) / pow(Rational(3), k);
                if (value <= Rational(0)) {
                    CHECK(std::binary_search(window.begin(), window.end(), value));
                }
            }
        }
    }
}

TEST_CASE("property: multiplicativity and ultrametric inequality")
{
    std::mt19937_64 rng(5);
    // 1 and 7/5 are Q-dependent, so only the inequality is asserted.
    const ToricValuation dep = weights({"1", "7/5"});
    const auto rnd = [&](std::size_t e) {
        PuiseuxPoly f(3, e);
        for (int t = 0; t < 4; ++t) {
            Exponents x;
            for (std::size_t i = 0; i < e; ++i) {
                x.emplace_back(static_cast<std::int64_t>(rng() % 5));
            }
            f.add_term(x, static_cast<std::int64_t>(1 + rng() % 2));
        }
        return f;
    };
    for (int i = 0; i < 1000; ++i) {
        const PuiseuxPoly f = rnd(2);
        const PuiseuxPoly g = rnd(2);
        REQUIRE(dep(f * g) >= dep(f) + dep(g));
        const Value sum = dep(f + g);
        REQUIRE(sum >= min(dep(f), dep(g)));
        if (dep(f) != dep(g)) {
            REQUIRE(sum == min(dep(f), dep(g)));
        }
        // Single-variable weights are trivially independent: exact equality.
        const ToricValuation one = weights({"3/2"});
        PuiseuxPoly a(3, 1);
        PuiseuxPoly b(3, 1);
        for (const auto &[x, c] : f.terms()) {
            a.add_term({x[0]}, c);
        }
        for (const auto &[x, c] : g.terms()) {
            b.add_term({x[1]}, c);
        }
        REQUIRE(one(a * b) == one(a) + one(b));
    }
}
