#ifndef MOLLY_LRR_HPP
#define MOLLY_LRR_HPP

#include <molly/error.hpp>
#include <molly/ffield.hpp>
#include <molly/perfring.hpp>
#include <molly/series.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace molly
{

enum class RecurrenceKind { LRR, RLRR };

// Arithmetic needed by the recurrence checks, over a finite field.
struct FieldDomain {
    const ExtField *field;
    using value_type = GfElement;

    [[nodiscard]] GfElement zero() const
    {
        return field->zero();
    }
    [[nodiscard]] GfElement add(const GfElement &a, const GfElement &b) const
    {
        return field->add(a, b);
    }
    [[nodiscard]] GfElement mul(const GfElement &a, const GfElement &b) const
    {
        return field->mul(a, b);
    }
    // a^{p^k}.
    [[nodiscard]] GfElement frob(const GfElement &a, unsigned k) const
    {
        return field->frobenius(a, k);
    }
};

// Same, over Puiseux polynomials.
struct PuiseuxDomain {
    std::uint32_t p;
    std::size_t e;
    using value_type = PuiseuxPoly;

    [[nodiscard]] PuiseuxPoly zero() const
    {
        return PuiseuxPoly(p, e);
    }
    [[nodiscard]] PuiseuxPoly add(const PuiseuxPoly &a, const PuiseuxPoly &b) const
    {
        return a + b;
    }
    [[nodiscard]] PuiseuxPoly mul(const PuiseuxPoly &a, const PuiseuxPoly &b) const
    {
        return a * b;
    }
    [[nodiscard]] PuiseuxPoly frob(const PuiseuxPoly &a, unsigned k) const
    {
        return a.frobenius(k);
    }
};

namespace detail
{

template <class Domain>
bool verify_recurrence(const Domain &dom, std::span<const typename Domain::value_type> seq,
                       std::span<const typename Domain::value_type> coeffs, bool reversed)
{
    if (coeffs.empty()) {
        throw Error(ErrorCode::InvalidArgument, "recurrence without coefficients");
    }
    const std::size_t n = coeffs.size() - 1;
    if (seq.size() < n + 1) {
        throw Error(ErrorCode::TooShort,
                    "sequence of length " + std::to_string(seq.size()) + " for a recurrence of order " + std::to_string(n));
    }
    for (std::size_t k = 0; k + n < seq.size(); ++k) {
        auto acc = dom.zero();
        for (std::size_t i = 0; i <= n; ++i) {
            const auto power = static_cast<unsigned>(reversed ? n - i : i);
            acc = dom.add(acc, dom.mul(coeffs[i], dom.frob(seq[k + i], power)));
        }
        if (!(acc == dom.zero())) {
            return false;
        }
    }
    return true;
}

} // namespace detail

// c_0 x_k + c_1 x_{k+1}^p + ... + c_n x_{k+n}^{p^n} = 0 for every window.
template <class Domain>
bool verify_lrr(const Domain &dom, std::span<const typename Domain::value_type> seq,
                std::span<const typename Domain::value_type> coeffs)
{
    return detail::verify_recurrence(dom, seq, coeffs, false);
}

// c_0 x_k^{p^n} + c_1 x_{k+1}^{p^{n-1}} + ... + c_n x_{k+n} = 0.
template <class Domain>
bool verify_rlrr(const Domain &dom, std::span<const typename Domain::value_type> seq,
                 std::span<const typename Domain::value_type> coeffs)
{
    return detail::verify_recurrence(dom, seq, coeffs, true);
}

// LRR: x_k = sum z_j lambda_j^{1/p^k}; RLRR: x_k = sum z_j lambda_j^{p^k}.
std::vector<GfElement> closed_form(const ExtField &field, std::span<const GfElement> z, std::span<const GfElement> lambda,
                                   RecurrenceKind kind, std::size_t length);

// The additive helpers of the telescoping identity:
// f(x_1..x_m) = sum_i d_i (x_1 + ... + x_i)^{p^i},
// g(x_1..x_m) = sum_i d_i (x_{i+1} + ... + x_m)^{p^i}.
GfElement telescope_f(const AdditivePolynomial &d, std::span<const GfElement> x);
GfElement telescope_g(const AdditivePolynomial &d, std::span<const GfElement> x);

struct TelescopeResult {
    GfElement lhs;
    GfElement rhs;
    bool equal = false;
};

// lhs = P(b_n + ... + b_{n2}), rhs = f(b_n..) - f(b_{n2+1}..) for
// P = sum d_i X^{p^i} with d_m = 1. The sequence must satisfy the LRR of d
// (RecurrenceViolated) and reach index n2 + m (TooShort).
TelescopeResult telescope_identity(const AdditivePolynomial &d, std::span<const GfElement> b, std::size_t n,
                                   std::size_t n2);

// Univariate polynomial in X with Puiseux coefficients, degree -> coeff.
using UniPoly = std::map<std::int64_t, PuiseuxPoly>;

struct RlrrExtraction {
    // Constant terms of b_0..b_n.
    std::vector<PuiseuxPoly> c;
    // The same read as rLRR coefficients for verify_rlrr (c reversed).
    std::vector<PuiseuxPoly> rlrr;
    unsigned N = 0;
    // c_n = 0.
    bool degenerate = false;
    // verify_rlrr(a_N, a_{N+1}, ...) with rlrr.
    bool verified = false;
};

// From b = b_0 f + b_1 f^p + ... + b_n f^{p^n} with f = sum_i a_i X^{p^i}
// known for i < a.size(). The relation is checked in degrees below
// p^{a.size()} (RelationFails); the tail must hold n + 1 terms past N
// (TruncationTooShallow).
RlrrExtraction extract_rlrr(const UniPoly &b, const std::vector<UniPoly> &bi, const std::vector<PuiseuxPoly> &a);

// hadamard(f, geometric_as_branch(n)) equals h(x^n) with
// h(X) = sum_k a_{p^k n} X^{p^k}.
bool branch_algebraicity_check(const FiberSeries &f, const FiberIndex &n);

} // namespace molly

#endif
