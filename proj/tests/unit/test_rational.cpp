#include <doctest.h>
#include <molly/error.hpp>
#include <molly/rational.hpp>

#include <limits>

using molly::ErrorCode;
using molly::Rational;

TEST_CASE("rational normalisation and printing")
{
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("rational errors")
{
    for (const char *bad : {"", "1/", "a", "1/0", "1 /2", "--1"}) {
        try {
            (void)Rational::parse(bad);
            FAIL("accepted " << bad);
        } catch (const molly::Error &e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big * big, molly::Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), molly::Error);
}

TEST_CASE("power helpers")
{
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2), -2) == Rational(1, 4));
    CHECK(molly::is_power_of(27, 3));
    CHECK(molly::is_power_of(1, 5));
    CHECK_FALSE(molly::is_power_of(12, 2));
}
