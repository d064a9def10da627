#include <molly/error.hpp>
#include <molly/series.hpp>

#include <algorithm>
#include <set>

namespace molly
{

namespace
{

FiberIndex times(const FiberIndex &k, std::int64_t c)
{
    FiberIndex r = k;
    for (auto &x : r) {
        x *= c;
    }
    return r;
}

bool is_zero_index(const FiberIndex &k)
{
    return std::all_of(k.begin(), k.end(), [](std::int64_t x) { return x == 0; });
}

void check_pi(const PuiseuxPoly &pi)
{
    if (!pi.is_monomial()) {
        throw Error(ErrorCode::NotAMonomial, "denominator must be a single term, got " + pi.to_string());
    }
    for (const auto &x : pi.terms().begin()->first) {
        if (!x.is_integer()) {
            throw Error(ErrorCode::InvalidArgument, "denominator exponents must be integers");
        }
    }
}

} // namespace

FiberSeries::FiberSeries(std::uint32_t p, std::size_t e, std::size_t d, std::int64_t bound)
    : FiberSeries(d, bound, PuiseuxPoly::constant(p, e, 1))
{
}

FiberSeries::FiberSeries(std::size_t d, std::int64_t bound, PuiseuxPoly pi)
    : m_d(d), m_bound(bound), m_pi(std::move(pi))
{
    if (d == 0) {
        throw Error(ErrorCode::InvalidArgument, "series needs at least one fiber variable");
    }
    if (bound < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative truncation bound");
    }
    check_pi(m_pi);
}

bool FiberSeries::in_box(const FiberIndex &k) const
{
    if (k.size() != m_d) {
        return false;
    }
    return std::all_of(k.begin(), k.end(), [&](std::int64_t x) { return x >= 0 && x <= m_bound; });
}

PuiseuxPoly FiberSeries::numerator(const FiberIndex &k) const
{
    const auto it = m_coeffs.find(k);
    return it == m_coeffs.end() ? PuiseuxPoly(p(), e()) : it->second;
}

PuiseuxPoly FiberSeries::coefficient(const FiberIndex &k) const
{
    return numerator(k).divide_monomial(m_pi);
}

void FiberSeries::add(const FiberIndex &k, const PuiseuxPoly &c)
{
    if (!in_box(k)) {
        std::string where;
        for (auto x : k) {
            where += (where.empty() ? "" : ",") + std::to_string(x);
        }
        throw Error(ErrorCode::InvalidIndex, "index (" + where + ") outside the box [0," + std::to_string(m_bound) + "]^"
                                                 + std::to_string(m_d));
    }
    if (c.is_zero()) {
        return;
    }
    auto it = m_coeffs.find(k);
    if (it == m_coeffs.end()) {
        // Validates p and e.
        PuiseuxPoly sum(p(), e());
        sum += c;
        m_coeffs.emplace(k, std::move(sum));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        m_coeffs.erase(it);
    }
}

void FiberSeries::add_coefficient(const FiberIndex &k, const PuiseuxPoly &c)
{
    add(k, c * m_pi);
}

FiberSeries FiberSeries::with_bound(std::int64_t bound) const
{
    FiberSeries r(m_d, bound, m_pi);
    for (const auto &[k, c] : m_coeffs) {
        r.add(k, c);
    }
    return r;
}

FiberSeries FiberSeries::with_pi(const PuiseuxPoly &pi) const
{
    FiberSeries r(m_d, m_bound, pi);
    const PuiseuxPoly factor = pi.divide_monomial(m_pi);
    for (const auto &[k, c] : m_coeffs) {
        r.m_coeffs.emplace(k, c * factor);
    }
    return r;
}

bool same_series(const FiberSeries &a, const FiberSeries &b)
{
    if (a.p() != b.p() || a.e() != b.e() || a.d() != b.d()) {
        return false;
    }
    std::set<FiberIndex> keys;
    for (const auto &[k, c] : a.coeffs()) {
        keys.insert(k);
    }
    for (const auto &[k, c] : b.coeffs()) {
        keys.insert(k);
    }
    return std::all_of(keys.begin(), keys.end(), [&](const FiberIndex &k) { return a.coefficient(k) == b.coefficient(k); });
}

bool is_lambda_index(const FiberIndex &n, std::uint32_t p)
{
    if (is_zero_index(n)) {
        return false;
    }
    return std::any_of(n.begin(), n.end(), [&](std::int64_t x) { return x % static_cast<std::int64_t>(p) != 0; });
}

std::pair<FiberIndex, unsigned> lambda_reduce(const FiberIndex &k, std::uint32_t p)
{
    if (is_zero_index(k) || std::any_of(k.begin(), k.end(), [](std::int64_t x) { return x < 0; })) {
        throw Error(ErrorCode::InvalidIndex, "only nonzero nonnegative indices have a Lambda reduction");
    }
    FiberIndex n = k;
    unsigned j = 0;
    const auto pp = static_cast<std::int64_t>(p);
    while (!is_lambda_index(n, p)) {
        for (auto &x : n) {
            x /= pp;
        }
        ++j;
    }
    return {n, j};
}

unsigned branch_length(const FiberIndex &n, std::uint32_t p, std::int64_t bound)
{
    const std::int64_t top = *std::max_element(n.begin(), n.end());
    if (top > bound) {
        return 0;
    }
    unsigned len = 0;
    for (std::int64_t t = top; t <= bound; t *= p) {
        ++len;
    }
    return len;
}

std::vector<BranchSequence> lambda_decompose(const FiberSeries &f)
{
    std::set<FiberIndex> classes;
    for (const auto &[k, c] : f.coeffs()) {
        if (!is_zero_index(k)) {
            classes.insert(lambda_reduce(k, f.p()).first);
        }
    }
    std::vector<BranchSequence> out;
    for (const auto &n : classes) {
        BranchSequence b{n, {}};
        const unsigned len = branch_length(n, f.p(), f.bound());
        FiberIndex k = n;
        for (unsigned i = 0; i < len; ++i) {
            b.entries.push_back(f.coefficient(k));
            k = times(k, f.p());
        }
        out.push_back(std::move(b));
    }
    return out;
}

PuiseuxPoly frobenius_section(const FiberSeries &f, const FiberIndex &n, unsigned m)
{
    if (!is_lambda_index(n, f.p())) {
        throw Error(ErrorCode::InvalidIndex, "section requires an index in Lambda");
    }
    PuiseuxPoly sum(f.p(), f.e());
    const unsigned len = branch_length(n, f.p(), f.bound());
    FiberIndex k = n;
    for (unsigned i = 0; i < len && i <= m; ++i) {
        sum += f.coefficient(k).p_root(i);
        k = times(k, f.p());
    }
    return sum;
}

PuiseuxPoly full_section(const FiberSeries &f, const FiberIndex &n)
{
    const unsigned len = branch_length(n, f.p(), f.bound());
    return frobenius_section(f, n, len == 0 ? 0 : len - 1);
}

bool twist_fits(const FiberSeries &f, const FiberSeries &g)
{
    return std::all_of(g.coeffs().begin(), g.coeffs().end(),
                       [&](const auto &kc) { return f.in_box(kc.first) && f.in_box(times(kc.first, f.p())); });
}

FiberSeries as_twist(const FiberSeries &f, const FiberSeries &g, bool strict)
{
    if (f.p() != g.p() || f.e() != g.e() || f.d() != g.d()) {
        throw Error(ErrorCode::DimensionMismatch, "twist with an incompatible series");
    }
    FiberSeries r = f;
    for (const auto &[k, num] : g.coeffs()) {
        const PuiseuxPoly c = g.coefficient(k);
        const FiberIndex pk = times(k, f.p());
        for (const auto &[idx, term] : {std::pair{k, -c}, std::pair{pk, c.frobenius()}}) {
            if (r.in_box(idx)) {
                r.add_coefficient(idx, term);
            } else if (strict) {
                throw Error(ErrorCode::BoundOverflow,
                            "twist term leaves the box [0," + std::to_string(f.bound()) + "]");
            }
        }
    }
    return r;
}

FiberSeries hadamard(const FiberSeries &f, const FiberSeries &g)
{
    if (f.p() != g.p() || f.e() != g.e() || f.d() != g.d()) {
        throw Error(ErrorCode::DimensionMismatch, "Hadamard product of incompatible series");
    }
    FiberSeries r(f.d(), std::min(f.bound(), g.bound()), f.pi() * g.pi());
    for (const auto &[k, a] : f.coeffs()) {
        const auto it = g.coeffs().find(k);
        if (it != g.coeffs().end() && r.in_box(k)) {
            r.add(k, a * it->second);
        }
    }
    return r;
}

FiberSeries geometric_as_branch(std::uint32_t p, std::size_t e, const FiberIndex &n, std::int64_t bound)
{
    if (!is_lambda_index(n, p)) {
        throw Error(ErrorCode::InvalidIndex, "geometric branch requires an index in Lambda");
    }
    FiberSeries r(p, e, n.size(), bound);
    const PuiseuxPoly one = PuiseuxPoly::constant(p, e, 1);
    FiberIndex k = n;
    for (unsigned i = 0; i < branch_length(n, p, bound); ++i) {
        r.add(k, one);
        k = times(k, p);
    }
    return r;
}

} // namespace molly
