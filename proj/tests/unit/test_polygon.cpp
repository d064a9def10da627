#include "support.hpp"

#include <doctest.h>
#include <molly/error.hpp>
#include <molly/polygon.hpp>

#include <map>
#include <random>

using namespace molly;
using molly::test::mono;

namespace
{

void check_shape(const Polygon &poly)
{
    CHECK(poly.is_concave());
    CHECK(poly.is_continuous());
}

} // namespace

TEST_CASE("envelope examples")
{
    const std::vector<Line> single{{2, 3}};
    const Polygon one = envelope(single, Interval{Rational(0), std::nullopt});
    CHECK(one.pieces().size() == 1);
    CHECK(one.breaks().empty());

    const std::vector<Line> two{{0, 0}, {-1, 1}};
    const Polygon p2 = envelope(two, Interval{Rational(0), std::nullopt});
    REQUIRE(p2.pieces().size() == 2);
    CHECK(p2.pieces()[0].line == Line{-1, 1});
    CHECK(*p2.pieces()[0].end == Rational(1));
    REQUIRE(p2.breaks().size() == 1);
    CHECK(p2.breaks()[0].s == Rational(1));
    check_shape(p2);

    const std::vector<Line> dominated{{0, 0}, {-1, 1}, {5, 0}};
    const Polygon p3 = envelope(dominated, Interval{Rational(0), std::nullopt});
    for (const auto &piece : p3.pieces()) {
        CHECK(piece.source != 2);
    }
    CHECK_THROWS_WITH_AS(envelope(std::vector<Line>{}, Interval{}), doctest::Contains("EmptyFamily"), Error);
    CHECK_THROWS_WITH_AS(envelope(two, Interval{Rational(2), Rational(1)}), doctest::Contains("InvalidInterval"), Error);
}

TEST_CASE("property: envelope is the pointwise minimum")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Line> lines;
        const int n = 1 + static_cast<int>(rng() % 7);
        for (int i = 0; i < n; ++i) {
            lines.push_back(Line{Rational(static_cast<std::int64_t>(rng() % 21) - 10, 1 + rng() % 3),
                                 Rational(static_cast<std::int64_t>(rng() % 9) - 4, 1 + rng() % 2)});
        }
        const Interval iv{Rational(-5), Rational(7)};
        const Polygon poly = envelope(lines, iv);
        check_shape(poly);
        for (int step = -50; step <= 70; ++step) {
            const Rational s(step, 10);
            Rational best = lines[0].at(s);
            for (const auto &l : lines) {
                best = std::min(best, l.at(s));
            }
            REQUIRE(poly(s) == best);
        }
        // Every piece line is attained at its midpoint.
        for (const auto &piece : poly.pieces()) {
            const Rational mid = (*piece.start + *piece.end) / Rational(2);
            REQUIRE(piece.line.at(mid) == poly(mid));
        }
    }
}

TEST_CASE("complete valuation polygon examples")
{
    const std::vector<Value> linear{Value(3), Value(0)};
    const Polygon p1 = complete_valuation_polygon(linear);
    REQUIRE(p1.breaks().size() == 1);
    CHECK(p1.breaks()[0].s == Rational(3));
    CHECK(p1.breaks()[0].slope_change == Rational(1));

    const std::vector<Value> constant{Value(2)};
    CHECK(complete_valuation_polygon(constant).breaks().empty());

    // (X - 1)(X + 1)(X - s^2) over F_3, v(s) = 1, by explicit expansion.
    const PuiseuxPoly one = mono(3, {"0"});
    const PuiseuxPoly s2 = mono(3, {"2"});
    std::vector<PuiseuxPoly> poly{one};
    for (const PuiseuxPoly &root : {one, -one, s2}) {
        std::vector<PuiseuxPoly> next(poly.size() + 1, PuiseuxPoly(3, 1));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * root;
        }
        poly = next;
    }
    const ToricValuation v = molly::test::weights({"1"});
    std::vector<Value> vals;
    for (const auto &c : poly) {
        vals.push_back(v(c));
    }
    const auto breaks = complete_valuation_polygon(vals).breaks();
    REQUIRE(breaks.size() == 2);
    CHECK(breaks[0].s == Rational(0));
    CHECK(breaks[0].slope_change == Rational(2));
    CHECK(breaks[1].s == Rational(2));
    CHECK(breaks[1].slope_change == Rational(1));
}

TEST_CASE("gauss path examples")
{
    const ToricValuation v0 = molly::test::weights({"1", "1"});
    const PuiseuxPoly zero(2, 2);
    const PuiseuxPoly one = mono(2, {"0", "0"});
    const PuiseuxPoly s = mono(2, {"1", "0"});

    const std::vector<PuiseuxPoly> t{zero, one};
    const Polygon pt = gauss_path_polygon(t, v0, std::nullopt);
    REQUIRE(pt.pieces().size() == 1);
    CHECK(pt.pieces()[0].line == Line{0, 1});

    const std::vector<PuiseuxPoly> s_plus_t{s, one};
    const Polygon p2 = gauss_path_polygon(s_plus_t, v0, std::nullopt);
    REQUIRE(p2.breaks().size() == 1);
    CHECK(p2.breaks()[0].s == Rational(1));
    CHECK(terminal_slope(p2) == Rational(0));

    const std::vector<PuiseuxPoly> st_t2{zero, s, one};
    const Polygon p3 = gauss_path_polygon(st_t2, v0, std::nullopt);
    REQUIRE(p3.pieces().size() == 2);
    CHECK(p3.pieces()[0].line.slope == Rational(2));
    CHECK(*p3.pieces()[0].end == Rational(1));
    CHECK(p3.pieces()[1].line.slope == Rational(1));
}

TEST_CASE("min_with_zero and scale")
{
    const std::vector<Line> lines{{-3, 1}, {1, -1}};
    const Polygon poly = envelope(lines, Interval{Rational(0), Rational(10)});
    const Polygon clipped = min_with_zero(poly);
    check_shape(clipped);
    for (int s = 0; s <= 10; ++s) {
        CHECK(clipped(Rational(s)) == std::min(Rational(0), poly(Rational(s))));
    }
    const Polygon half = scale(poly, Rational(1, 2));
    for (int s = 0; s <= 10; ++s) {
        CHECK(half(Rational(s)) == poly(Rational(s)) / Rational(2));
    }
}

TEST_CASE("npinf polygon along a path")
{
    const FiberSeries h = molly::test::intro_series(3);
    const Polygon poly = npinf_polygon(h, {Rational(9), Rational(1)}, {Rational(0), Rational(1)},
                                       Interval{Rational(0), std::nullopt});
    check_shape(poly);
    CHECK(terminal_slope(poly) == Rational(0));
    // At U = (9, 3) the value is npinf = -6.
    CHECK(poly(Rational(2)) == Rational(-6));
    CHECK_THROWS_WITH_AS(npinf_polygon(h, {Rational(9), Rational(1)}, {Rational(0), Rational(-1)},
                                       Interval{Rational(0), std::nullopt}),
                         doctest::Contains("WeightsNonpositive"), Error);
}
