#include <molly/error.hpp>
#include <molly/ffield.hpp>
#include <molly/perfring.hpp>

#include <algorithm>

namespace molly
{

namespace
{

std::uint32_t reduce_coeff(std::int64_t c, std::uint32_t p) noexcept
{
    const std::int64_t m = static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(((c % m) + m) % m);
}

std::int64_t ipow(std::int64_t base, unsigned k)
{
    std::int64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= base;
    }
    return r;
}

} // namespace

bool GradedLex::operator()(const Exponents &a, const Exponents &b) const
{
    Rational da;
    Rational db;
    for (const auto &x : a) {
        da += x;
    }
    for (const auto &x : b) {
        db += x;
    }
    if (da != db) {
        return da < db;
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PuiseuxPoly::PuiseuxPoly(std::uint32_t p, std::size_t e) : m_p(PrimeConfig(p).p()), m_e(e) {}

PuiseuxPoly PuiseuxPoly::constant(std::uint32_t p, std::size_t e, std::int64_t c)
{
    return monomial(p, e, c, Exponents(e, Rational(0)));
}

PuiseuxPoly PuiseuxPoly::monomial(std::uint32_t p, std::size_t e, std::int64_t c, Exponents exps)
{
    PuiseuxPoly r(p, e);
    r.add_term(exps, c);
    return r;
}

PuiseuxPoly PuiseuxPoly::variable(std::uint32_t p, std::size_t e, std::size_t i, Rational power)
{
    if (i >= e) {
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    }
    Exponents exps(e, Rational(0));
    exps[i] = power;
    return monomial(p, e, 1, std::move(exps));
}

std::uint32_t PuiseuxPoly::coefficient(const Exponents &exps) const
{
    const auto it = m_terms.find(exps);
    return it == m_terms.end() ? 0 : it->second;
}

void PuiseuxPoly::add_term(const Exponents &exps, std::int64_t c)
{
    if (exps.size() != m_e) {
        throw Error(ErrorCode::VariableCountMismatch,
                    "exponent vector of length " + std::to_string(exps.size()) + ", expected " + std::to_string(m_e));
    }
    for (const auto &x : exps) {
        if (!is_power_of(x.den(), m_p)) {
            throw Error(ErrorCode::InvalidArgument,
                        "exponent " + x.to_string() + " has a denominator that is not a power of " + std::to_string(m_p));
        }
    }
    const std::uint32_t cc = reduce_coeff(c, m_p);
    if (cc == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(exps, cc);
    if (!inserted) {
        it->second = (it->second + cc) % m_p;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

void PuiseuxPoly::check_compatible(const PuiseuxPoly &other) const
{
    if (m_e != other.m_e) {
        throw Error(ErrorCode::VariableCountMismatch,
                    std::to_string(m_e) + " vs " + std::to_string(other.m_e) + " base variables");
    }
    if (m_p != other.m_p) {
        throw Error(ErrorCode::FieldMismatch, "characteristic " + std::to_string(m_p) + " vs " + std::to_string(other.m_p));
    }
}

PuiseuxPoly &PuiseuxPoly::operator+=(const PuiseuxPoly &other)
{
    check_compatible(other);
    for (const auto &[exps, c] : other.m_terms) {
        auto [it, inserted] = m_terms.try_emplace(exps, c);
        if (!inserted) {
            it->second = (it->second + c) % m_p;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }
    return *this;
}

PuiseuxPoly &PuiseuxPoly::operator-=(const PuiseuxPoly &other)
{
    return *this += -other;
}

PuiseuxPoly PuiseuxPoly::operator-() const
{
    PuiseuxPoly r = *this;
    for (auto &[exps, c] : r.m_terms) {
        c = m_p - c;
    }
    return r;
}

PuiseuxPoly &PuiseuxPoly::operator*=(const PuiseuxPoly &other)
{
    check_compatible(other);
    PuiseuxPoly r(m_p, m_e);
    Exponents sum(m_e);
    for (const auto &[ea, ca] : m_terms) {
        for (const auto &[eb, cb] : other.m_terms) {
            for (std::size_t i = 0; i < m_e; ++i) {
                sum[i] = ea[i] + eb[i];
            }
            auto [it, inserted] = r.m_terms.try_emplace(sum, (ca * cb) % m_p);
            if (!inserted) {
                it->second = (it->second + ca * cb) % m_p;
                if (it->second == 0) {
                    r.m_terms.erase(it);
                }
            }
        }
    }
    *this = std::move(r);
    return *this;
}

PuiseuxPoly PuiseuxPoly::scaled(std::int64_t c) const
{
    PuiseuxPoly r(m_p, m_e);
    const std::uint32_t cc = reduce_coeff(c, m_p);
    if (cc == 0) {
        return r;
    }
    r.m_terms = m_terms;
    for (auto &[exps, coeff] : r.m_terms) {
        coeff = (coeff * cc) % m_p;
    }
    return r;
}

PuiseuxPoly PuiseuxPoly::pow(unsigned k) const
{
    PuiseuxPoly r = constant(m_p, m_e, 1);
    for (unsigned i = 0; i < k; ++i) {
        r *= *this;
    }
    return r;
}

PuiseuxPoly PuiseuxPoly::frobenius(unsigned k) const
{
    const Rational factor(ipow(m_p, k));
    PuiseuxPoly r(m_p, m_e);
    for (const auto &[exps, c] : m_terms) {
        Exponents scaled = exps;
        for (auto &x : scaled) {
            x *= factor;
        }
        r.m_terms.emplace(std::move(scaled), c);
    }
    return r;
}

PuiseuxPoly PuiseuxPoly::p_root(unsigned k) const
{
    const Rational factor(ipow(m_p, k));
    PuiseuxPoly r(m_p, m_e);
    for (const auto &[exps, c] : m_terms) {
        Exponents scaled = exps;
        for (auto &x : scaled) {
            x /= factor;
        }
        r.m_terms.emplace(std::move(scaled), c);
    }
    return r;
}

PuiseuxPoly PuiseuxPoly::divide_monomial(const PuiseuxPoly &m) const
{
    check_compatible(m);
    if (!m.is_monomial()) {
        throw Error(ErrorCode::NotAMonomial, "divisor has " + std::to_string(m.size()) + " terms");
    }
    const auto &[mexps, mc] = *m.m_terms.begin();
    // Inverse of the coefficient in F_p.
    std::uint32_t inv = 1;
    for (std::uint32_t i = 0; i + 2 < m_p; ++i) {
        inv = (inv * mc) % m_p;
    }
    PuiseuxPoly r(m_p, m_e);
    for (const auto &[exps, c] : m_terms) {
        Exponents diff = exps;
        for (std::size_t i = 0; i < m_e; ++i) {
            diff[i] -= mexps[i];
        }
        r.m_terms.emplace(std::move(diff), (c * inv) % m_p);
    }
    return r;
}

PuiseuxPoly PuiseuxPoly::filter(const std::function<bool(const Exponents &)> &pred) const
{
    PuiseuxPoly r(m_p, m_e);
    for (const auto &[exps, c] : m_terms) {
        if (pred(exps)) {
            r.m_terms.emplace(exps, c);
        }
    }
    return r;
}

std::string PuiseuxPoly::to_string(std::span<const std::string> names) const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    // Highest degree first reads more naturally.
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        const auto &[exps, c] = *it;
        std::string term;
        for (std::size_t i = 0; i < m_e; ++i) {
            if (exps[i].is_zero()) {
                continue;
            }
            if (!term.empty()) {
                term += "*";
            }
            term += i < names.size() ? names[i] : "s" + std::to_string(i + 1);
            if (exps[i] != Rational(1)) {
                term += "^" + exps[i].to_string();
            }
        }
        if (term.empty()) {
            term = std::to_string(c);
        } else if (c != 1) {
            term = std::to_string(c) + "*" + term;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += term;
    }
    return out;
}

} // namespace molly
