#ifndef MOLLY_TEST_SUPPORT_HPP
#define MOLLY_TEST_SUPPORT_HPP

#include <molly/perfring.hpp>
#include <molly/series.hpp>
#include <molly/valuation.hpp>

#include <string>
#include <vector>

namespace molly::test
{

inline Exponents exps(std::initializer_list<const char *> text)
{
    Exponents out;
    for (const char *t : text) {
        out.push_back(Rational::parse(t));
    }
    return out;
}

inline PuiseuxPoly mono(std::uint32_t p, std::initializer_list<const char *> e, std::int64_t c = 1)
{
    return PuiseuxPoly::monomial(p, e.size(), c, exps(e));
}

inline ToricValuation weights(std::initializer_list<const char *> w)
{
    return ToricValuation(exps(w));
}

// h = x^p / s + t x / s over (s, t), one fiber variable, box [0, p].
inline FiberSeries intro_series(std::uint32_t p)
{
    FiberSeries h(1, p, mono(p, {"1", "0"}));
    h.add({static_cast<std::int64_t>(p)}, mono(p, {"0", "0"}));
    h.add({1}, mono(p, {"0", "1"}));
    return h;
}

} // namespace molly::test

#endif
