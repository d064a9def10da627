#include "support.hpp"

#include <doctest.h>
#include <molly/error.hpp>
#include <molly/series.hpp>

#include <random>

using namespace molly;
using molly::test::mono;

namespace
{

FiberSeries random_series(std::mt19937_64 &rng, std::uint32_t p, std::size_t e, std::size_t d, std::int64_t bound)
{
    Exponents pi_exps(e, Rational(0));
    pi_exps[0] = static_cast<std::int64_t>(rng() % 3);
    FiberSeries f(d, bound, PuiseuxPoly::monomial(p, e, 1, pi_exps));
    const int terms = 1 + static_cast<int>(rng() % 8);
    for (int t = 0; t < terms; ++t) {
        FiberIndex k;
        for (std::size_t i = 0; i < d; ++i) {
            k.push_back(static_cast<std::int64_t>(rng() % (bound + 1)));
        }
        Exponents x;
        for (std::size_t i = 0; i < e; ++i) {
            x.emplace_back(static_cast<std::int64_t>(rng() % 4));
        }
        f.add(k, PuiseuxPoly::monomial(p, e, 1 + static_cast<std::int64_t>(rng() % (p - 1)), x));
    }
    return f;
}

} // namespace

TEST_CASE("lambda decomposition examples")
{
    FiberSeries f(2, 1, 1, 4);
    const PuiseuxPoly a = mono(2, {"1"});
    f.add({1}, a);
    auto branches = lambda_decompose(f);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].n == FiberIndex{1});
    CHECK(branches[0].entries.front() == a);

    FiberSeries g(2, 1, 1, 4);
    const PuiseuxPoly one = mono(2, {"0"});
    g.add({1}, one);
    g.add({2}, one);
    g.add({4}, one);
    branches = lambda_decompose(g);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].entries == std::vector<PuiseuxPoly>{one, one, one});

    FiberSeries h(2, 1, 2, 4);
    h.add({2, 1}, mono(2, {"1"}));
    h.add({4, 2}, mono(2, {"2"}));
    branches = lambda_decompose(h);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].n == FiberIndex{2, 1});
    CHECK(lambda_reduce({4, 2}, 2) == std::pair{FiberIndex{2, 1}, 1u});
    CHECK(branches[0].entries == std::vector<PuiseuxPoly>{mono(2, {"1"}), mono(2, {"2"})});
}

TEST_CASE("frobenius section of the intro series")
{
    const FiberSeries h = molly::test::intro_series(3);
    const PuiseuxPoly t_over_s = mono(3, {"-1", "1"});
    CHECK(frobenius_section(h, {1}, 0) == t_over_s);
    CHECK(frobenius_section(h, {1}, 1) == t_over_s + mono(3, {"-1/3", "0"}));
    CHECK(frobenius_section(h, {1}, 7) == frobenius_section(h, {1}, 1));
}

TEST_CASE("property: partition, stabilisation, twist involution, hadamard")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 5);
        const std::size_t d = 1 + trial % 2;
        const std::int64_t D = 4 + static_cast<std::int64_t>(rng() % 14);
        const FiberSeries f = random_series(rng, p, 2, d, D);

        std::size_t entries = 0;
        for (const auto &b : lambda_decompose(f)) {
            for (const auto &c : b.entries) {
                entries += c.is_zero() ? 0 : 1;
            }
            const unsigned depth = branch_length(b.n, p, D) - 1;
            std::int64_t reach = *std::max_element(b.n.begin(), b.n.end());
            unsigned log = 0;
            while (reach * p <= D) {
                reach *= p;
                ++log;
            }
            REQUIRE(depth == log);
            REQUIRE(frobenius_section(f, b.n, depth) == frobenius_section(f, b.n, depth + 1));
            REQUIRE(hadamard(f, geometric_as_branch(p, 2, b.n, D)).coeffs().size() <= depth + 1);
        }
        std::size_t nonzero = 0;
        for (const auto &[k, c] : f.coeffs()) {
            nonzero += std::any_of(k.begin(), k.end(), [](std::int64_t x) { return x != 0; }) ? 1 : 0;
        }
        REQUIRE(entries == nonzero);

        // Twist by g supported in the lower part of the box.
        FiberSeries g(p, 2, d, D);
        FiberIndex k(d, 0);
        k[0] = 1 + static_cast<std::int64_t>(rng() % std::max<std::int64_t>(1, D / p));
        g.add(k, mono(p, {"-1", "1"}).p_root());
        if (twist_fits(f, g)) {
            FiberSeries minus_g(p, 2, d, D);
            for (const auto &[idx, c] : g.coeffs()) {
                minus_g.add(idx, -c);
            }
            REQUIRE(same_series(as_twist(as_twist(f, g), minus_g), f));
        }
    }
}

TEST_CASE("hadamard identities")
{
    std::mt19937_64 rng(9);
    const FiberSeries f = random_series(rng, 3, 2, 1, 12);
    const FiberSeries g = random_series(rng, 3, 2, 1, 12);
    CHECK(same_series(hadamard(f, g), hadamard(g, f)));
    FiberSeries ones(3, 2, 1, 12);
    for (std::int64_t i = 0; i <= 12; ++i) {
        ones.add({i}, mono(3, {"0", "0"}));
    }
    CHECK(same_series(hadamard(f, ones), f));
}

TEST_CASE("geometric branch satisfies g - g^p = x^n in the box")
{
    const FiberSeries g = geometric_as_branch(2, 1, {3}, 24);
    CHECK(g.coeffs().size() == 4);
    // f = 0, twist by -g gives -(g^p) + g... i.e. (-g)^p - (-g) = g - g^p.
    FiberSeries minus_g(2, 1, 1, 24);
    for (const auto &[k, c] : g.coeffs()) {
        minus_g.add(k, -c);
    }
    const FiberSeries diff = as_twist(FiberSeries(2, 1, 1, 24), minus_g);
    FiberSeries expected(2, 1, 1, 24);
    expected.add({3}, mono(2, {"0"}));
    CHECK(same_series(diff, expected));
}

TEST_CASE("strict truncation")
{
    FiberSeries f(2, 1, 1, 4);
    FiberSeries g(2, 1, 1, 4);
    g.add({3}, mono(2, {"0"}));
    CHECK_FALSE(twist_fits(f, g));
    CHECK_THROWS_WITH_AS(as_twist(f, g, true), doctest::Contains("BoundOverflow"), Error);
    CHECK(as_twist(f, g).coeffs().size() == 1);
    CHECK_THROWS_WITH_AS(f.add({5}, mono(2, {"0"})), doctest::Contains("InvalidIndex"), Error);
    CHECK_THROWS_WITH_AS(FiberSeries(1, 4, mono(2, {"0"}) + mono(2, {"1"})), doctest::Contains("NotAMonomial"), Error);
}
