#include <molly/error.hpp>
#include <molly/valuation.hpp>

#include <algorithm>
#include <set>

namespace molly
{

const Rational &Value::rational() const
{
    if (!m_value) {
        throw Error(ErrorCode::InvalidArgument, "value is infinite");
    }
    return *m_value;
}

std::string Value::to_string() const
{
    return m_value ? m_value->to_string() : "inf";
}

std::strong_ordering operator<=>(const Value &a, const Value &b)
{
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
    }
    return *a.m_value <=> *b.m_value;
}

Value operator+(const Value &a, const Value &b)
{
    if (a.is_infinite() || b.is_infinite()) {
        return Value::infinity();
    }
    return Value(*a.m_value + *b.m_value);
}

Value operator-(const Value &a, const Rational &b)
{
    if (a.is_infinite()) {
        return a;
    }
    return Value(*a.m_value - b);
}

Value min(const Value &a, const Value &b)
{
    return b < a ? b : a;
}

ToricValuation::ToricValuation(std::vector<Rational> weights) : m_weights(std::move(weights))
{
    if (m_weights.empty()) {
        throw Error(ErrorCode::InvalidArgument, "valuation needs at least one weight");
    }
    for (const auto &w : m_weights) {
        if (w.sign() <= 0) {
            throw Error(ErrorCode::NonpositiveWeight, "weight " + w.to_string() + " is not positive");
        }
    }
}

ToricValuation ToricValuation::divisorial(std::size_t e, std::size_t i)
{
    if (i >= e) {
        throw Error(ErrorCode::InvalidArgument, "divisor index out of range");
    }
    ToricValuation v;
    v.m_weights.assign(e, Rational(0));
    v.m_weights[i] = 1;
    v.m_divisorial = true;
    return v;
}

void ToricValuation::check_dimension(std::size_t e) const
{
    if (e != m_weights.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(e) + " variables vs " + std::to_string(m_weights.size()) + " weights");
    }
}

Rational ToricValuation::pairing(const Exponents &exps) const
{
    check_dimension(exps.size());
    Rational r;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!m_weights[i].is_zero() && !exps[i].is_zero()) {
            r += exps[i] * m_weights[i];
        }
    }
    return r;
}

Value ToricValuation::operator()(const PuiseuxPoly &f) const
{
    check_dimension(f.e());
    Value best = Value::infinity();
    for (const auto &[exps, c] : f.terms()) {
        best = min(best, Value(pairing(exps)));
    }
    return best;
}

PuiseuxPoly ToricValuation::graded_part(const PuiseuxPoly &f, const Rational &level) const
{
    check_dimension(f.e());
    return f.filter([&](const Exponents &exps) { return pairing(exps) == level; });
}

PuiseuxPoly ToricValuation::initial_part(const PuiseuxPoly &f) const
{
    const Value v = (*this)(f);
    if (v.is_infinite()) {
        return f;
    }
    return graded_part(f, v.rational());
}

Value val(const ToricValuation &v, const PuiseuxPoly &f)
{
    return v(f);
}

Value val_fraction(const ToricValuation &v, const PuiseuxPoly &num, const PuiseuxPoly &den)
{
    if (den.is_zero()) {
        throw Error(ErrorCode::ZeroDenominator, "fraction with zero denominator");
    }
    return v(num) - v(den).rational();
}

std::vector<Rational> value_window(const ToricValuation &v, const PuiseuxPoly &pi,
                                   std::span<const PuiseuxPoly> generators, unsigned depth)
{
    const Value vpi = v(pi);
    if (vpi.is_infinite() || vpi.rational().sign() <= 0) {
        throw Error(ErrorCode::NonpositivePi, "v(pi) = " + vpi.to_string() + " is not positive");
    }
    const Rational top = vpi.rational();
    std::vector<Rational> gens;
    for (const auto &g : generators) {
        const Value vg = v(g);
        if (vg.is_infinite()) {
            continue;
        }
        if (vg.rational().sign() < 0) {
            throw Error(ErrorCode::InvalidArgument, "generator of negative value " + vg.to_string());
        }
        if (vg.rational().sign() > 0) {
            gens.push_back(vg.rational());
        }
    }
    // Semigroup elements up to v(pi), by closure.
    std::set<Rational> semigroup{Rational(0)};
    std::vector<Rational> frontier{Rational(0)};
    while (!frontier.empty()) {
        std::vector<Rational> next;
        for (const auto &w : frontier) {
            for (const auto &g : gens) {
                const Rational s = w + g;
                if (s <= top && semigroup.insert(s).second) {
                    next.push_back(s);
                }
            }
        }
        frontier = std::move(next);
    }
    std::set<Rational> out;
    Rational scale(1);
    for (unsigned k = 0; k <= depth; ++k) {
        for (const auto &w : semigroup) {
            out.insert((w - top) / scale);
        }
        scale *= Rational(static_cast<std::int64_t>(pi.p()));
    }
    return {out.begin(), out.end()};
}

} // namespace molly
