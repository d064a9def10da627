#include <molly/error.hpp>
#include <molly/ffield.hpp>

#include <algorithm>
#include <cassert>
#include <functional>
#include <utility>

namespace molly
{

namespace
{

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept
{
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept
{
    std::uint32_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1U) {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) noexcept
{
    return powmod(a, p - 2, p);
}

// ---- dense polynomials over F_p ----

void trim(FpPoly &f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

FpPoly fp_sub(FpPoly a, const FpPoly &b, std::uint32_t p)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), 0);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] = (a[i] + p - b[i]) % p;
    }
    trim(a);
    return a;
}

FpPoly fp_mul(const FpPoly &a, const FpPoly &b, std::uint32_t p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    trim(r);
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly &m, std::uint32_t p)
{
    assert(!m.empty());
    const std::uint32_t lead_inv = invmod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint32_t q = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j) {
            a[shift + j] = (a[shift + j] + p - mulmod(q, m[j], p)) % p;
        }
        trim(a);
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint32_t inv = invmod(a.back(), p);
        for (auto &c : a) {
            c = mulmod(c, inv, p);
        }
    }
    return a;
}

// base^e mod m.
FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly &m, std::uint32_t p)
{
    FpPoly result = fp_mod(FpPoly{1}, m, p);
    base = fp_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1U) {
            result = fp_mod(fp_mul(result, base, p), m, p);
        }
        base = fp_mod(fp_mul(base, base, p), m, p);
        e >>= 1U;
    }
    return result;
}

// ---- dense polynomials over an extension field ----

using LPoly = std::vector<GfElement>;

void ltrim(const ExtField &f, LPoly &a)
{
    while (!a.empty() && f.is_zero(a.back())) {
        a.pop_back();
    }
}

LPoly l_add(const ExtField &f, LPoly a, const LPoly &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), f.zero());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] = f.add(a[i], b[i]);
    }
    ltrim(f, a);
    return a;
}

LPoly l_mul(const ExtField &f, const LPoly &a, const LPoly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    LPoly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    ltrim(f, r);
    return r;
}

// Quotient and remainder of a by nonzero m.
std::pair<LPoly, LPoly> l_divmod(const ExtField &f, LPoly a, const LPoly &m)
{
    ltrim(f, a);
    const GfElement lead_inv = f.inv(m.back());
    LPoly q;
    if (a.size() >= m.size()) {
        q.assign(a.size() - m.size() + 1, f.zero());
    }
    while (a.size() >= m.size()) {
        const GfElement c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - m.size();
        q[shift] = c;
        for (std::size_t j = 0; j < m.size(); ++j) {
            a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
        }
        ltrim(f, a);
    }
    ltrim(f, q);
    return {std::move(q), std::move(a)};
}

LPoly l_mod(const ExtField &f, LPoly a, const LPoly &m)
{
    return l_divmod(f, std::move(a), m).second;
}

LPoly l_monic(const ExtField &f, LPoly a)
{
    ltrim(f, a);
    if (a.empty()) {
        return a;
    }
    const GfElement inv = f.inv(a.back());
    for (auto &c : a) {
        c = f.mul(c, inv);
    }
    return a;
}

LPoly l_gcd(const ExtField &f, LPoly a, LPoly b)
{
    ltrim(f, a);
    ltrim(f, b);
    while (!b.empty()) {
        LPoly r = l_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return l_monic(f, std::move(a));
}

LPoly l_powmod(const ExtField &f, LPoly base, std::uint64_t e, const LPoly &m)
{
    LPoly result = l_mod(f, LPoly{f.one()}, m);
    base = l_mod(f, std::move(base), m);
    while (e > 0) {
        if (e & 1U) {
            result = l_mod(f, l_mul(f, result, base), m);
        }
        base = l_mod(f, l_mul(f, base, base), m);
        e >>= 1U;
    }
    return result;
}

// Equal-degree splitting of a monic squarefree product of linear factors.
void split_linear(const ExtField &f, const LPoly &g, std::vector<GfElement> &roots)
{
    if (g.size() <= 1) {
        return;
    }
    if (g.size() == 2) {
        roots.push_back(f.neg(g[0]));
        return;
    }
    const std::uint64_t q = f.order();
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        const GfElement delta = f.from_index(idx);
        LPoly probe;
        if (f.p() == 2) {
            // Trace form: sum_{i<m} (delta X)^{2^i} mod g.
            LPoly t = l_mod(f, LPoly{f.zero(), delta}, g);
            LPoly acc = t;
            for (unsigned i = 1; i < f.degree(); ++i) {
                t = l_mod(f, l_mul(f, t, t), g);
                acc = l_add(f, acc, t);
            }
            probe = std::move(acc);
        } else {
            probe = l_powmod(f, LPoly{delta, f.one()}, (q - 1) / 2, g);
            probe = l_add(f, std::move(probe), LPoly{f.neg(f.one())});
        }
        LPoly d = l_gcd(f, g, probe);
        if (d.size() > 1 && d.size() < g.size()) {
            LPoly other = l_monic(f, l_divmod(f, g, d).first);
            split_linear(f, d, roots);
            split_linear(f, other, roots);
            return;
        }
    }
    // Unreachable for squarefree split input.
    throw Error(ErrorCode::InvalidArgument, "root splitting failed");
}

} // namespace

bool is_prime(std::uint32_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeConfig::PrimeConfig(std::uint32_t p) : m_p(p)
{
    if (!is_prime(p)) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    if (p > kMaxPrime) {
        throw Error(ErrorCode::UnsupportedPrime, "primes above " + std::to_string(kMaxPrime) + " are not supported");
    }
}

bool is_irreducible(std::uint32_t p, const FpPoly &monic)
{
    if (monic.size() < 2 || monic.back() != 1) {
        return false;
    }
    const std::size_t m = monic.size() - 1;
    if (m == 1) {
        return true;
    }
    const FpPoly x{0, 1};
    FpPoly power = fp_mod(x, monic, p);
    for (std::size_t k = 1; k <= m; ++k) {
        power = fp_powmod(power, p, monic, p);
        const FpPoly diff = fp_sub(power, fp_mod(x, monic, p), p);
        if (k < m && m % k == 0) {
            if (fp_gcd(monic, diff, p).size() != 1) {
                return false;
            }
        }
        if (k == m && !diff.empty()) {
            return false;
        }
    }
    return true;
}

ExtField ExtField::build(std::uint32_t p, unsigned m)
{
    const PrimeConfig prime(p);
    if (m == 0 || m > kMaxExtDegree) {
        throw Error(ErrorCode::DegreeTooLarge,
                    "extension degree " + std::to_string(m) + " outside 1.." + std::to_string(kMaxExtDegree));
    }
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) {
        count *= p;
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FpPoly f(m + 1, 0);
        std::uint64_t rest = idx;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[m] = 1;
        if (is_irreducible(p, f)) {
            return ExtField(p, std::move(f));
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

ExtField::ExtField(std::uint32_t p, FpPoly modulus) : m_p(PrimeConfig(p).p()), m_modulus(std::move(modulus))
{
    trim(m_modulus);
    if (m_modulus.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
    }
    m_m = static_cast<unsigned>(m_modulus.size() - 1);
    if (m_m > kMaxExtDegree) {
        throw Error(ErrorCode::DegreeTooLarge, "extension degree above " + std::to_string(kMaxExtDegree));
    }
    for (auto c : m_modulus) {
        if (c >= p) {
            throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
        }
    }
    if (!is_irreducible(p, m_modulus)) {
        throw Error(ErrorCode::InvalidArgument, "modulus is not monic irreducible");
    }
    m_order = 1;
    for (unsigned i = 0; i < m_m; ++i) {
        m_order *= p;
    }
}

GfElement ExtField::one() const noexcept
{
    GfElement r;
    r.c[0] = 1;
    return r;
}

GfElement ExtField::generator() const noexcept
{
    GfElement r;
    if (m_m == 1) {
        // X = -c_0 mod (X + c_0).
        r.c[0] = static_cast<std::uint8_t>((m_p - m_modulus[0]) % m_p);
    } else {
        r.c[1] = 1;
    }
    return r;
}

GfElement ExtField::from_int(std::int64_t v) const noexcept
{
    GfElement r;
    const std::int64_t p = m_p;
    r.c[0] = static_cast<std::uint8_t>(((v % p) + p) % p);
    return r;
}

GfElement ExtField::from_coeffs(std::span<const std::uint32_t> coeffs) const
{
    FpPoly f(coeffs.begin(), coeffs.end());
    for (auto &c : f) {
        c %= m_p;
    }
    trim(f);
    f = fp_mod(std::move(f), m_modulus, m_p);
    GfElement r;
    for (std::size_t i = 0; i < f.size(); ++i) {
        r.c[i] = static_cast<std::uint8_t>(f[i]);
    }
    return r;
}

GfElement ExtField::from_index(std::uint64_t index) const
{
    if (index >= m_order) {
        throw Error(ErrorCode::InvalidIndex, "field element index out of range");
    }
    GfElement r;
    for (unsigned i = 0; i < m_m; ++i) {
        r.c[i] = static_cast<std::uint8_t>(index % m_p);
        index /= m_p;
    }
    return r;
}

std::uint64_t ExtField::index(const GfElement &a) const noexcept
{
    std::uint64_t idx = 0;
    for (unsigned i = m_m; i-- > 0;) {
        idx = idx * m_p + a.c[i];
    }
    return idx;
}

GfElement ExtField::add(const GfElement &a, const GfElement &b) const noexcept
{
    GfElement r;
    for (unsigned i = 0; i < m_m; ++i) {
        r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) % m_p);
    }
    return r;
}

GfElement ExtField::sub(const GfElement &a, const GfElement &b) const noexcept
{
    GfElement r;
    for (unsigned i = 0; i < m_m; ++i) {
        r.c[i] = static_cast<std::uint8_t>((a.c[i] + m_p - b.c[i]) % m_p);
    }
    return r;
}

GfElement ExtField::neg(const GfElement &a) const noexcept
{
    return sub(GfElement{}, a);
}

GfElement ExtField::scale(const GfElement &a, std::uint32_t s) const noexcept
{
    GfElement r;
    for (unsigned i = 0; i < m_m; ++i) {
        r.c[i] = static_cast<std::uint8_t>((a.c[i] * (s % m_p)) % m_p);
    }
    return r;
}

GfElement ExtField::mul(const GfElement &a, const GfElement &b) const noexcept
{
    std::array<std::uint32_t, 2 * kMaxExtDegree> prod{};
    for (unsigned i = 0; i < m_m; ++i) {
        if (a.c[i] == 0) {
            continue;
        }
        for (unsigned j = 0; j < m_m; ++j) {
            prod[i + j] += static_cast<std::uint32_t>(a.c[i]) * b.c[j];
        }
    }
    for (auto &v : prod) {
        v %= m_p;
    }
    for (unsigned i = 2 * m_m - 1; i-- > m_m;) {
        const std::uint32_t q = prod[i];
        if (q == 0) {
            continue;
        }
        // Subtract q * X^{i-m} * modulus; the leading coefficient is 1.
        for (unsigned j = 0; j <= m_m; ++j) {
            prod[i - m_m + j] = (prod[i - m_m + j] + (m_p - q) * m_modulus[j]) % m_p;
        }
    }
    GfElement r;
    for (unsigned i = 0; i < m_m; ++i) {
        r.c[i] = static_cast<std::uint8_t>(prod[i]);
    }
    return r;
}

GfElement ExtField::pow(GfElement a, std::uint64_t e) const noexcept
{
    GfElement r = one();
    while (e > 0) {
        if (e & 1U) {
            r = mul(r, a);
        }
        e >>= 1U;
        if (e > 0) {
            a = mul(a, a);
        }
    }
    return r;
}

GfElement ExtField::inv(const GfElement &a) const
{
    if (is_zero(a)) {
        throw Error(ErrorCode::ZeroDenominator, "inverse of zero field element");
    }
    return pow(a, m_order - 2);
}

GfElement ExtField::frobenius(const GfElement &a) const noexcept
{
    return pow(a, m_p);
}

GfElement ExtField::frobenius(const GfElement &a, unsigned k) const noexcept
{
    GfElement r = a;
    for (unsigned i = 0; i < k % m_m; ++i) {
        r = frobenius(r);
    }
    return r;
}

GfElement ExtField::p_root(const GfElement &a) const noexcept
{
    return frobenius(a, m_m - 1);
}

GfElement ExtField::p_root(const GfElement &a, unsigned k) const noexcept
{
    return frobenius(a, (m_m - k % m_m) % m_m);
}

std::vector<GfElement> ExtField::elements() const
{
    std::vector<GfElement> out;
    out.reserve(m_order);
    for (std::uint64_t i = 0; i < m_order; ++i) {
        out.push_back(from_index(i));
    }
    return out;
}

std::string ExtField::to_string(const GfElement &a) const
{
    std::string out;
    for (unsigned i = m_m; i-- > 0;) {
        if (a.c[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (i == 0 || a.c[i] != 1) {
            out += std::to_string(a.c[i]);
        }
        if (i >= 1) {
            out += "g";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

FieldEmbedding::FieldEmbedding(const ExtField &source, const ExtField &target) : m_source(source), m_target(target)
{
    if (source.p() != target.p() || target.degree() % source.degree() != 0) {
        throw Error(ErrorCode::FieldMismatch, "no embedding F_{p^" + std::to_string(source.degree()) + "} -> F_{p^"
                                                  + std::to_string(target.degree()) + "}");
    }
    if (source == target) {
        m_image = target.generator();
        return;
    }
    std::vector<GfElement> lifted;
    for (auto c : source.modulus()) {
        lifted.push_back(target.from_int(c));
    }
    const auto roots = roots_in_field(target, std::move(lifted));
    if (roots.empty()) {
        throw Error(ErrorCode::FieldMismatch, "source modulus has no root in target field");
    }
    m_image = roots.front();
}

GfElement FieldEmbedding::operator()(const GfElement &a) const
{
    GfElement r = m_target.zero();
    for (unsigned i = m_source.degree(); i-- > 0;) {
        r = m_target.add(m_target.mul(r, m_image), m_target.from_int(a.c[i]));
    }
    return r;
}

std::vector<GfElement> roots_in_field(const ExtField &field, std::vector<GfElement> poly)
{
    LPoly f = l_monic(field, std::move(poly));
    if (f.size() <= 1) {
        return {};
    }
    // X^q mod f by m-fold Frobenius.
    LPoly xq = l_mod(field, LPoly{field.zero(), field.one()}, f);
    for (unsigned i = 0; i < field.degree(); ++i) {
        xq = l_powmod(field, xq, field.p(), f);
    }
    const LPoly split = l_gcd(field, f, l_add(field, xq, LPoly{field.zero(), field.neg(field.one())}));
    std::vector<GfElement> roots;
    split_linear(field, split, roots);
    std::sort(roots.begin(), roots.end(),
              [&](const GfElement &a, const GfElement &b) { return field.index(a) < field.index(b); });
    return roots;
}

std::vector<std::vector<std::uint32_t>> nullspace_mod_p(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows,
                                                        std::size_t cols)
{
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] % p == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const std::uint32_t inv = invmod(rows[rank][col] % p, p);
        for (auto &v : rows[rank]) {
            v = mulmod(v % p, inv, p);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] % p == 0) {
                continue;
            }
            const std::uint32_t factor = rows[r][col] % p;
            for (std::size_t c = 0; c < cols; ++c) {
                rows[r][c] = (rows[r][c] % p + p - mulmod(factor, rows[rank][c], p)) % p;
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) {
        is_pivot[c] = true;
    }
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<std::uint32_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = (p - rows[r][free] % p) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

GfElement AdditivePolynomial::evaluate(const GfElement &x) const
{
    GfElement acc = field.zero();
    GfElement power = x;
    for (const auto &c : coeffs) {
        acc = field.add(acc, field.mul(c, power));
        power = field.frobenius(power);
    }
    return acc;
}

AdditivePolynomial AdditivePolynomial::embedded(const FieldEmbedding &embedding) const
{
    AdditivePolynomial out{embedding.target(), {}};
    out.coeffs.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        out.coeffs.push_back(embedding(c));
    }
    return out;
}

AdditiveKernel additive_kernel(const AdditivePolynomial &poly, unsigned search_bound)
{
    const ExtField &base = poly.field;
    if (poly.coeffs.empty() || base.is_zero(poly.coeffs.front()) || base.is_zero(poly.coeffs.back())) {
        throw Error(ErrorCode::InvalidArgument, "additive kernel requires c_0 != 0 and c_n != 0");
    }
    const auto n = static_cast<std::size_t>(poly.height());
    if (n == 0) {
        return AdditiveKernel{base, FieldEmbedding(base, base), {}, 1};
    }
    for (unsigned j = 1; j <= search_bound; ++j) {
        const unsigned dim = base.degree() * j;
        if (dim > kMaxExtDegree) {
            break;
        }
        const ExtField big = (j == 1) ? base : ExtField::build(base.p(), dim);
        const FieldEmbedding embedding(base, big);
        const AdditivePolynomial lifted = poly.embedded(embedding);
        // Column b holds the coordinates of P(g^b).
        std::vector<std::vector<std::uint32_t>> rows(dim, std::vector<std::uint32_t>(dim, 0));
        for (unsigned b = 0; b < dim; ++b) {
            GfElement basis_vec;
            basis_vec.c[b] = 1;
            const GfElement image = lifted.evaluate(basis_vec);
            for (unsigned r = 0; r < dim; ++r) {
                rows[r][b] = image.c[r];
            }
        }
        const auto kernel = nullspace_mod_p(base.p(), std::move(rows), dim);
        if (kernel.size() == n) {
            AdditiveKernel out{big, embedding, {}, j};
            for (const auto &v : kernel) {
                out.basis.push_back(big.from_coeffs(v));
            }
            return out;
        }
    }
    throw Error(ErrorCode::KernelNotFound, "no field F_{p^{mj}} with j <= " + std::to_string(search_bound)
                                               + " and mj <= " + std::to_string(kMaxExtDegree)
                                               + " contains the full root space");
}

AdditivePolynomial subspace_polynomial(const ExtField &field, std::span<const GfElement> basis)
{
    AdditivePolynomial poly{field, {field.one()}};
    for (const auto &beta : basis) {
        const GfElement at_beta = poly.evaluate(beta);
        if (field.is_zero(at_beta)) {
            throw Error(ErrorCode::InvalidArgument, "subspace basis is not F_p-independent");
        }
        const GfElement c = field.pow(at_beta, field.p() - 1);
        std::vector<GfElement> next(poly.coeffs.size() + 1, field.zero());
        for (std::size_t i = 0; i < next.size(); ++i) {
            GfElement term = field.zero();
            if (i >= 1) {
                term = field.frobenius(poly.coeffs[i - 1]);
            }
            if (i < poly.coeffs.size()) {
                term = field.sub(term, field.mul(c, poly.coeffs[i]));
            }
            next[i] = term;
        }
        poly.coeffs = std::move(next);
    }
    return poly;
}

} // namespace molly
