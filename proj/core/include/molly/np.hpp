#ifndef MOLLY_NP_HPP
#define MOLLY_NP_HPP

#include <molly/series.hpp>
#include <molly/valuation.hpp>

#include <map>

namespace molly
{

// Leading graded part of a series at a negative level.
struct SymbolPart {
    std::uint32_t p = 0;
    Rational level;
    std::map<FiberIndex, PuiseuxPoly> terms;
};

// min{0, v(a_k / pi) : k != 0}.
Rational np(const FiberSeries &h, const ToricValuation &v);
// min{0, v(full section of n) : n in Lambda}.
Rational npinf(const FiberSeries &h, const ToricValuation &v);

// NonNegativeNP when np(h)(v) = 0.
SymbolPart symbol(const FiberSeries &h, const ToricValuation &v);
// Some k with a nonzero symbol term has a coordinate prime to p.
bool is_separable_symbol(const SymbolPart &sym);
bool is_weakly_admissible(const FiberSeries &h, const ToricValuation &v);

} // namespace molly

#endif
