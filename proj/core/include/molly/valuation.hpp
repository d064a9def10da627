#ifndef MOLLY_VALUATION_HPP
#define MOLLY_VALUATION_HPP

#include <molly/perfring.hpp>
#include <molly/rational.hpp>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace molly
{

// A rational or +infinity (the value of 0).
class Value
{
public:
    // NOLINTNEXTLINE(google-explicit-constructor)
    Value(Rational r) : m_value(r) {}
    static Value infinity()
    {
        return Value();
    }

    [[nodiscard]] bool is_infinite() const noexcept
    {
        return !m_value.has_value();
    }
    [[nodiscard]] bool is_finite() const noexcept
    {
        return m_value.has_value();
    }
    // Throws InvalidArgument on infinity.
    [[nodiscard]] const Rational &rational() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Value &, const Value &) = default;
    friend std::strong_ordering operator<=>(const Value &a, const Value &b);
    friend Value operator+(const Value &a, const Value &b);
    friend Value operator-(const Value &a, const Rational &b);

private:
    Value() = default;
    std::optional<Rational> m_value;
};

Value min(const Value &a, const Value &b);

// Monomial valuation v_U(sum a_k s^k) = min{<k, U> : a_k != 0}.
class ToricValuation
{
public:
    // All weights must be > 0 (NonpositiveWeight otherwise).
    explicit ToricValuation(std::vector<Rational> weights);

    // Order of vanishing along the coordinate divisor s_i = 0: weight 1 on
    // s_i and 0 elsewhere. Only meaningful for series whose other
    // coordinates are units.
    static ToricValuation divisorial(std::size_t e, std::size_t i);

    [[nodiscard]] const std::vector<Rational> &weights() const noexcept
    {
        return m_weights;
    }
    [[nodiscard]] std::size_t e() const noexcept
    {
        return m_weights.size();
    }
    [[nodiscard]] bool is_divisorial() const noexcept
    {
        return m_divisorial;
    }

    [[nodiscard]] Rational pairing(const Exponents &exps) const;
    [[nodiscard]] Value operator()(const PuiseuxPoly &f) const;
    // Terms of f of weight exactly `level`.
    [[nodiscard]] PuiseuxPoly graded_part(const PuiseuxPoly &f, const Rational &level) const;
    // Terms of weight val(f); zero for f = 0.
    [[nodiscard]] PuiseuxPoly initial_part(const PuiseuxPoly &f) const;

    friend bool operator==(const ToricValuation &, const ToricValuation &) = default;

private:
    ToricValuation() = default;
    void check_dimension(std::size_t e) const;

    std::vector<Rational> m_weights;
    bool m_divisorial = false;
};

Value val(const ToricValuation &v, const PuiseuxPoly &f);
// val(num) - val(den); ZeroDenominator if den = 0.
Value val_fraction(const ToricValuation &v, const PuiseuxPoly &num, const PuiseuxPoly &den);

// All values (W - v(pi)) / p^k with W a nonnegative integer combination of
// generator values and 0 <= k <= depth, intersected with [-v(pi), 0].
// Generators of value 0 contribute nothing and are skipped. Throws
// NonpositivePi if v(pi) <= 0 and InvalidArgument for a negative generator.
std::vector<Rational> value_window(const ToricValuation &v, const PuiseuxPoly &pi,
                                   std::span<const PuiseuxPoly> generators, unsigned depth);

} // namespace molly

#endif
