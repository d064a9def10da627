#ifndef MOLLY_RATIONAL_HPP
#define MOLLY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace molly
{

// Exact rational number with 64-bit numerator and denominator.
//
// Always stored in lowest terms with a positive denominator. Every
// operation computes in 128 bits and throws Error(Overflow) if the reduced
// result does not fit, so results are either exact or an exception.
class Rational
{
public:
    constexpr Rational() noexcept = default;
    // NOLINTNEXTLINE(google-explicit-constructor)
    constexpr Rational(std::int64_t n) noexcept : m_num(n) {}
    Rational(std::int64_t n, std::int64_t d);

    [[nodiscard]] constexpr std::int64_t num() const noexcept
    {
        return m_num;
    }
    [[nodiscard]] constexpr std::int64_t den() const noexcept
    {
        return m_den;
    }

    [[nodiscard]] bool is_integer() const noexcept
    {
        return m_den == 1;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return m_num == 0;
    }
    [[nodiscard]] int sign() const noexcept
    {
        return (m_num > 0) - (m_num < 0);
    }

    // Largest integer <= *this.
    [[nodiscard]] std::int64_t floor() const noexcept;
    // Smallest integer >= *this.
    [[nodiscard]] std::int64_t ceil() const noexcept;

    [[nodiscard]] double to_double() const noexcept;

    // "a" for integers, "a/b" otherwise.
    [[nodiscard]] std::string to_string() const;

    // Accepts "a", "-a", "a/b", "-a/b" (whitespace not allowed).
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }

    friend bool operator==(const Rational &, const Rational &) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept;

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.to_string();
    }

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t m_num = 0;
    std::int64_t m_den = 1;
};

// Integer power of a rational (negative exponents allowed for nonzero base).
Rational pow(const Rational &base, std::int64_t exponent);

// True iff n is a (nonnegative) power of p, including p^0 = 1.
bool is_power_of(std::int64_t n, std::int64_t p) noexcept;

} // namespace molly

#endif
