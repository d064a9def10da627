#ifndef MOLLY_PERFRING_HPP
#define MOLLY_PERFRING_HPP

#include <molly/rational.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace molly
{

// Exponent vector; entries have p-power denominators.
using Exponents = std::vector<Rational>;

// Total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exponents &a, const Exponents &b) const;
};

// Sparse Laurent polynomial over F_p in e variables with exponents in
// Z[1/p]. Coefficients are kept in 1..p-1; zero terms are never stored.
class PuiseuxPoly
{
public:
    using TermMap = std::map<Exponents, std::uint32_t, GradedLex>;

    PuiseuxPoly(std::uint32_t p, std::size_t e);

    static PuiseuxPoly constant(std::uint32_t p, std::size_t e, std::int64_t c);
    static PuiseuxPoly monomial(std::uint32_t p, std::size_t e, std::int64_t c, Exponents exps);
    // s_i^power.
    static PuiseuxPoly variable(std::uint32_t p, std::size_t e, std::size_t i, Rational power = 1);

    [[nodiscard]] std::uint32_t p() const noexcept
    {
        return m_p;
    }
    [[nodiscard]] std::size_t e() const noexcept
    {
        return m_e;
    }
    [[nodiscard]] const TermMap &terms() const noexcept
    {
        return m_terms;
    }
    [[nodiscard]] std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    [[nodiscard]] bool is_monomial() const noexcept
    {
        return m_terms.size() == 1;
    }
    // Coefficient of s^exps, 0 if absent.
    [[nodiscard]] std::uint32_t coefficient(const Exponents &exps) const;

    // Adds c * s^exps. Throws InvalidArgument for a bad exponent vector.
    void add_term(const Exponents &exps, std::int64_t c);

    PuiseuxPoly &operator+=(const PuiseuxPoly &other);
    PuiseuxPoly &operator-=(const PuiseuxPoly &other);
    PuiseuxPoly &operator*=(const PuiseuxPoly &other);
    PuiseuxPoly operator-() const;

    friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly &b)
    {
        return a += b;
    }
    friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly &b)
    {
        return a -= b;
    }
    friend PuiseuxPoly operator*(const PuiseuxPoly &a, const PuiseuxPoly &b)
    {
        PuiseuxPoly r = a;
        return r *= b;
    }
    friend bool operator==(const PuiseuxPoly &, const PuiseuxPoly &) = default;

    [[nodiscard]] PuiseuxPoly scaled(std::int64_t c) const;
    [[nodiscard]] PuiseuxPoly pow(unsigned k) const;

    // f^{p^k}: exponents times p^k.
    [[nodiscard]] PuiseuxPoly frobenius(unsigned k = 1) const;
    // f^{1/p^k}: exponents divided by p^k.
    [[nodiscard]] PuiseuxPoly p_root(unsigned k = 1) const;
    // Exact division by a single term. Throws NotAMonomial otherwise.
    [[nodiscard]] PuiseuxPoly divide_monomial(const PuiseuxPoly &m) const;

    // Terms whose exponent vector satisfies pred.
    [[nodiscard]] PuiseuxPoly filter(const std::function<bool(const Exponents &)> &pred) const;

    // Human-readable, e.g. "2*s^-1/3*t + 1". Names default to s1..se.
    [[nodiscard]] std::string to_string(std::span<const std::string> names = {}) const;

private:
    void check_compatible(const PuiseuxPoly &other) const;

    std::uint32_t m_p;
    std::size_t m_e;
    TermMap m_terms;
};

} // namespace molly

#endif
