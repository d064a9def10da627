#include <molly/lrr.hpp>

#include <algorithm>
#include <limits>

namespace molly
{

std::vector<GfElement> closed_form(const ExtField &field, std::span<const GfElement> z, std::span<const GfElement> lambda,
                                   RecurrenceKind kind, std::size_t length)
{
    if (z.size() != lambda.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(z.size()) + " roots vs " + std::to_string(lambda.size()) + " multipliers");
    }
    std::vector<GfElement> seq;
    seq.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        GfElement x = field.zero();
        for (std::size_t j = 0; j < z.size(); ++j) {
            const auto kk = static_cast<unsigned>(k % field.degree());
            const GfElement twisted = kind == RecurrenceKind::LRR ? field.p_root(lambda[j], kk) : field.frobenius(lambda[j], kk);
            x = field.add(x, field.mul(z[j], twisted));
        }
        seq.push_back(x);
    }
    return seq;
}

GfElement telescope_f(const AdditivePolynomial &d, std::span<const GfElement> x)
{
    const ExtField &F = d.field;
    GfElement out = F.zero();
    GfElement partial = F.zero();
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
        if (i >= 1) {
            partial = F.add(partial, x[i - 1]);
        }
        out = F.add(out, F.mul(d.coeffs[i], F.frobenius(partial, static_cast<unsigned>(i))));
    }
    return out;
}

GfElement telescope_g(const AdditivePolynomial &d, std::span<const GfElement> x)
{
    const ExtField &F = d.field;
    const std::size_t m = d.coeffs.size() - 1;
    GfElement out = F.zero();
    for (std::size_t i = 0; i <= m; ++i) {
        GfElement partial = F.zero();
        for (std::size_t j = i + 1; j <= m; ++j) {
            partial = F.add(partial, x[j - 1]);
        }
        out = F.add(out, F.mul(d.coeffs[i], F.frobenius(partial, static_cast<unsigned>(i))));
    }
    return out;
}

TelescopeResult telescope_identity(const AdditivePolynomial &d, std::span<const GfElement> b, std::size_t n,
                                   std::size_t n2)
{
    const ExtField &F = d.field;
    if (d.coeffs.empty() || d.coeffs.back() != F.one()) {
        throw Error(ErrorCode::InvalidArgument, "telescoping needs a monic additive polynomial (d_m = 1)");
    }
    if (n > n2) {
        throw Error(ErrorCode::InvalidArgument, "telescoping range is empty");
    }
    const std::size_t m = d.coeffs.size() - 1;
    if (b.size() < n2 + m + 1) {
        throw Error(ErrorCode::TooShort, "sequence must reach index n' + m = " + std::to_string(n2 + m));
    }
    if (!verify_lrr(FieldDomain{&F}, b, std::span<const GfElement>(d.coeffs))) {
        throw Error(ErrorCode::RecurrenceViolated, "sequence does not satisfy the recurrence of d");
    }
    GfElement sum = F.zero();
    for (std::size_t i = n; i <= n2; ++i) {
        sum = F.add(sum, b[i]);
    }
    TelescopeResult r;
    r.lhs = d.evaluate(sum);
    r.rhs = F.sub(telescope_f(d, b.subspan(n, m)), telescope_f(d, b.subspan(n2 + 1, m)));
    r.equal = r.lhs == r.rhs;
    return r;
}

RlrrExtraction extract_rlrr(const UniPoly &b, const std::vector<UniPoly> &bi, const std::vector<PuiseuxPoly> &a)
{
    if (bi.empty() || a.empty()) {
        throw Error(ErrorCode::InvalidArgument, "relation needs b_0 and at least one term of f");
    }
    const std::uint32_t p = a.front().p();
    const std::size_t e = a.front().e();
    const std::size_t n = bi.size() - 1;
    const std::size_t T = a.size();
    const auto pp = static_cast<std::int64_t>(p);

    std::int64_t limit = 1;
    for (std::size_t i = 0; i < T; ++i) {
        if (limit > std::numeric_limits<std::int64_t>::max() / pp) {
            throw Error(ErrorCode::Overflow, "truncation degree p^T does not fit in 64 bits");
        }
        limit *= pp;
    }

    std::int64_t M = 0;
    const auto scan = [&](const UniPoly &u) {
        for (const auto &[deg, c] : u) {
            if (deg < 0) {
                throw Error(ErrorCode::InvalidArgument, "negative degree in relation");
            }
            if (!c.is_zero()) {
                M = std::max(M, deg);
            }
        }
    };
    scan(b);
    for (const auto &u : bi) {
        scan(u);
    }

    // Both sides below degree p^T.
    UniPoly lhs;
    UniPoly rhs;
    const auto add_to = [](UniPoly &u, std::int64_t deg, const PuiseuxPoly &c) {
        auto [it, inserted] = u.try_emplace(deg, c);
        if (!inserted) {
            it->second += c;
        }
        if (it->second.is_zero()) {
            u.erase(it);
        }
    };
    for (const auto &[deg, c] : b) {
        if (deg < limit && !c.is_zero()) {
            add_to(lhs, deg, c);
        }
    }
    for (std::size_t i = 0; i <= n; ++i) {
        std::int64_t xpow = 1;
        for (std::size_t s = 0; s < i; ++s) {
            xpow = xpow < limit ? xpow * pp : limit;
        }
        for (std::size_t k = 0; k + i < T; ++k, xpow = xpow < limit ? xpow * pp : limit) {
            if (a[k].is_zero()) {
                continue;
            }
            const PuiseuxPoly ak = a[k].frobenius(static_cast<unsigned>(i));
            for (const auto &[deg, c] : bi[i]) {
                if (deg + xpow < limit && !c.is_zero()) {
                    add_to(rhs, deg + xpow, c * ak);
                }
            }
        }
    }
    if (lhs != rhs) {
        throw Error(ErrorCode::RelationFails, "relation does not hold below degree " + std::to_string(limit));
    }

    RlrrExtraction out;
    for (const auto &u : bi) {
        const auto it = u.find(0);
        out.c.push_back(it == u.end() ? PuiseuxPoly(p, e) : it->second);
    }
    out.rlrr.assign(out.c.rbegin(), out.c.rend());
    out.degenerate = out.c.back().is_zero();

    // Minimal N with p^{n+N-1} > M.
    unsigned N = 0;
    while (true) {
        const auto x = static_cast<std::int64_t>(n) + N - 1;
        const Rational lhs_value = pow(Rational(pp), x);
        if (lhs_value > Rational(M)) {
            break;
        }
        ++N;
    }
    out.N = N;
    if (T < N + n + 1) {
        throw Error(ErrorCode::TruncationTooShallow,
                    "need at least " + std::to_string(N + n + 1) + " terms of f, got " + std::to_string(T));
    }
    const std::span<const PuiseuxPoly> tail(a.begin() + N, a.end());
    out.verified = verify_rlrr(PuiseuxDomain{p, e}, tail, std::span<const PuiseuxPoly>(out.rlrr));
    return out;
}

bool branch_algebraicity_check(const FiberSeries &f, const FiberIndex &n)
{
    const FiberSeries product = hadamard(f, geometric_as_branch(f.p(), f.e(), n, f.bound()));
    FiberSeries substituted(f.d(), f.bound(), f.pi());
    FiberIndex k = n;
    for (unsigned i = 0; i < branch_length(n, f.p(), f.bound()); ++i) {
        substituted.add(k, f.numerator(k));
        for (auto &x : k) {
            x *= f.p();
        }
    }
    return same_series(product, substituted);
}

} // namespace molly
