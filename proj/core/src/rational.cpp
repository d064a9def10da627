#include <molly/error.hpp>
#include <molly/rational.hpp>

#include <charconv>
#include <limits>
#include <numeric>

namespace molly
{

namespace
{

__int128 gcd128(__int128 a, __int128 b) noexcept
{
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v) noexcept
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d)
{
    if (d == 0) {
        throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits64(n) || !fits64(d)) {
        throw Error(ErrorCode::Overflow, "rational arithmetic exceeds 64 bits");
    }
    Rational r;
    r.m_num = static_cast<std::int64_t>(n);
    r.m_den = static_cast<std::int64_t>(d);
    if (r.m_num == 0) {
        r.m_den = 1;
    }
    return r;
}

std::int64_t Rational::floor() const noexcept
{
    std::int64_t q = m_num / m_den;
    if (m_num % m_den != 0 && m_num < 0) {
        --q;
    }
    return q;
}

std::int64_t Rational::ceil() const noexcept
{
    std::int64_t q = m_num / m_den;
    if (m_num % m_den != 0 && m_num > 0) {
        ++q;
    }
    return q;
}

double Rational::to_double() const noexcept
{
    return static_cast<double>(m_num) / static_cast<double>(m_den);
}

std::string Rational::to_string() const
{
    if (m_den == 1) {
        return std::to_string(m_num);
    }
    return std::to_string(m_num) + "/" + std::to_string(m_den);
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        std::int64_t value = 0;
        const char *first = part.data();
        const char *last = part.data() + part.size();
        if (first != last && *first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (part.empty() || ec != std::errc{} || ptr != last) {
            throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
        }
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), d);
}

Rational Rational::operator-() const
{
    return from_wide(-static_cast<__int128>(m_num), m_den);
}

Rational &Rational::operator+=(const Rational &other)
{
    if (m_den == other.m_den) {
        *this = from_wide(static_cast<__int128>(m_num) + other.m_num, m_den);
    } else {
        *this = from_wide(static_cast<__int128>(m_num) * other.m_den + static_cast<__int128>(other.m_num) * m_den,
                          static_cast<__int128>(m_den) * other.m_den);
    }
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    return *this += -other;
}

Rational &Rational::operator*=(const Rational &other)
{
    *this = from_wide(static_cast<__int128>(m_num) * other.m_num, static_cast<__int128>(m_den) * other.m_den);
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.m_num == 0) {
        throw Error(ErrorCode::ZeroDenominator, "division by zero rational");
    }
    *this = from_wide(static_cast<__int128>(m_num) * other.m_den, static_cast<__int128>(m_den) * other.m_num);
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept
{
    const __int128 lhs = static_cast<__int128>(a.m_num) * b.m_den;
    const __int128 rhs = static_cast<__int128>(b.m_num) * a.m_den;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rational pow(const Rational &base, std::int64_t exponent)
{
    if (exponent < 0) {
        return pow(Rational(1) / base, -exponent);
    }
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

bool is_power_of(std::int64_t n, std::int64_t p) noexcept
{
    if (n < 1 || p < 2) {
        return n == 1;
    }
    while (n % p == 0) {
        n /= p;
    }
    return n == 1;
}

} // namespace molly
