#include <molly/error.hpp>
#include <molly/np.hpp>

#include <algorithm>

namespace molly
{

namespace
{

bool is_zero_index(const FiberIndex &k)
{
    return std::all_of(k.begin(), k.end(), [](std::int64_t x) { return x == 0; });
}

} // namespace

Rational np(const FiberSeries &h, const ToricValuation &v)
{
    Value best(Rational(0));
    for (const auto &[k, c] : h.coeffs()) {
        if (!is_zero_index(k)) {
            best = min(best, v(c) - v(h.pi()).rational());
        }
    }
    return best.rational();
}

Rational npinf(const FiberSeries &h, const ToricValuation &v)
{
    Value best(Rational(0));
    for (const auto &branch : lambda_decompose(h)) {
        best = min(best, v(full_section(h, branch.n)));
    }
    return best.rational();
}

SymbolPart symbol(const FiberSeries &h, const ToricValuation &v)
{
    const Rational level = np(h, v);
    if (level.sign() >= 0) {
        throw Error(ErrorCode::NonNegativeNP, "symbol is only defined when NP < 0");
    }
    SymbolPart sym{h.p(), level, {}};
    for (const auto &[k, c] : h.coeffs()) {
        if (is_zero_index(k)) {
            continue;
        }
        PuiseuxPoly part = v.graded_part(h.coefficient(k), level);
        if (!part.is_zero()) {
            sym.terms.emplace(k, std::move(part));
        }
    }
    return sym;
}

bool is_separable_symbol(const SymbolPart &sym)
{
    return std::any_of(sym.terms.begin(), sym.terms.end(),
                       [&](const auto &kt) { return is_lambda_index(kt.first, sym.p); });
}

bool is_weakly_admissible(const FiberSeries &h, const ToricValuation &v)
{
    return np(h, v) == npinf(h, v);
}

} // namespace molly
