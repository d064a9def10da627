#include "support.hpp"

#include <doctest.h>
#include <molly/error.hpp>

#include <random>

using namespace molly;
using molly::test::mono;

namespace
{

PuiseuxPoly random_poly(std::mt19937_64 &rng, std::uint32_t p, std::size_t e)
{
    PuiseuxPoly f(p, e);
    const int terms = static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        Exponents x;
        for (std::size_t i = 0; i < e; ++i) {
            const std::int64_t den = rng() % 3 == 0 ? p : 1;
            x.emplace_back(static_cast<std::int64_t>(rng() % 7) - 2, den);
        }
        f.add_term(x, static_cast<std::int64_t>(rng() % p));
    }
    return f;
}

} // namespace

TEST_CASE("ring operations")
{
    const PuiseuxPoly s = PuiseuxPoly::variable(2, 2, 0);
    const PuiseuxPoly t = PuiseuxPoly::variable(2, 2, 1);
    CHECK((s + t) * (s + t) == s * s + t * t);
    CHECK((s + t) + (-(s + t)) == PuiseuxPoly(2, 2));

    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PuiseuxPoly root = PuiseuxPoly::variable(p, 1, 0, Rational(1, p));
        CHECK(root.pow(p) == PuiseuxPoly::variable(p, 1, 0));
    }
    CHECK_THROWS_WITH_AS(s + PuiseuxPoly(2, 3), doctest::Contains("VariableCountMismatch"), Error);
    CHECK_THROWS_AS(mono(3, {"1/2"}), Error);
}

TEST_CASE("frobenius and p-th roots")
{
    const PuiseuxPoly s = PuiseuxPoly::variable(3, 2, 0);
    const PuiseuxPoly t = PuiseuxPoly::variable(3, 2, 1);
    CHECK(PuiseuxPoly::variable(3, 2, 0, Rational(1, 3)).frobenius() == s);
    CHECK((s + t).frobenius() == s.pow(3) + t.pow(3));
    CHECK((s + t).frobenius() == (s + t).pow(3));
    CHECK(PuiseuxPoly(3, 2).frobenius().is_zero());

    CHECK(mono(2, {"2", "4"}).p_root() == mono(2, {"1", "2"}));
    const PuiseuxPoly u = mono(2, {"1", "0"}) + mono(2, {"0", "1"});
    const PuiseuxPoly r = u.p_root();
    CHECK(r == mono(2, {"1/2", "0"}) + mono(2, {"0", "1/2"}));
    CHECK(r * r == u);
}

TEST_CASE("property: frobenius and p_root are inverse and additive")
{
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 1000; ++i) {
            const PuiseuxPoly f = random_poly(rng, p, 2);
            const PuiseuxPoly g = random_poly(rng, p, 2);
            REQUIRE(f.frobenius().p_root() == f);
            REQUIRE(f.p_root().frobenius() == f);
            REQUIRE((f + g).frobenius() == f.frobenius() + g.frobenius());
            for (const PuiseuxPoly &h : {f * g, f.p_root(3), (f + g).frobenius(2)}) {
                for (const auto &[x, c] : h.terms()) {
                    for (const auto &q : x) {
                        REQUIRE(is_power_of(q.den(), p));
                    }
                }
            }
        }
    }
}

TEST_CASE("divide_monomial")
{
    const PuiseuxPoly f = mono(3, {"2", "1"}) + mono(3, {"0", "0"}, 2);
    const PuiseuxPoly q = f.divide_monomial(mono(3, {"1", "0"}, 2));
    CHECK(q == mono(3, {"1", "1"}, 2) + mono(3, {"-1", "0"}));
    CHECK(q * mono(3, {"1", "0"}, 2) == f);
    CHECK_THROWS_WITH_AS((void)f.divide_monomial(f), doctest::Contains("NotAMonomial"), Error);
}

TEST_CASE("graded lex ordering is deterministic")
{
    const PuiseuxPoly f = mono(2, {"1", "0"}) + mono(2, {"0", "0"}) + mono(2, {"0", "2"});
    std::vector<Exponents> order;
    for (const auto &[x, c] : f.terms()) {
        order.push_back(x);
    }
    REQUIRE(order.size() == 3);
    CHECK(order[0] == molly::test::exps({"0", "0"}));
    CHECK(order[1] == molly::test::exps({"1", "0"}));
    CHECK(order[2] == molly::test::exps({"0", "2"}));
    CHECK(f.to_string() == "s2^2 + s1 + 1");
}
