#ifndef MOLLY_SERIES_HPP
#define MOLLY_SERIES_HPP

#include <molly/perfring.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace molly
{

// Multi-index into the fiber variables x_1..x_d.
using FiberIndex = std::vector<std::int64_t>;

// Truncated series sum_k (a_k / pi) x^k with every coordinate of k in
// [0, bound]. The stored a_k are numerators; pi is a single term with
// integral exponents.
class FiberSeries
{
public:
    using CoeffMap = std::map<FiberIndex, PuiseuxPoly>;

    // pi = 1.
    FiberSeries(std::uint32_t p, std::size_t e, std::size_t d, std::int64_t bound);
    FiberSeries(std::size_t d, std::int64_t bound, PuiseuxPoly pi);

    [[nodiscard]] std::uint32_t p() const noexcept
    {
        return m_pi.p();
    }
    [[nodiscard]] std::size_t e() const noexcept
    {
        return m_pi.e();
    }
    [[nodiscard]] std::size_t d() const noexcept
    {
        return m_d;
    }
    [[nodiscard]] std::int64_t bound() const noexcept
    {
        return m_bound;
    }
    [[nodiscard]] const PuiseuxPoly &pi() const noexcept
    {
        return m_pi;
    }
    [[nodiscard]] const CoeffMap &coeffs() const noexcept
    {
        return m_coeffs;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    [[nodiscard]] bool in_box(const FiberIndex &k) const;

    // Numerator at k (zero if absent).
    [[nodiscard]] PuiseuxPoly numerator(const FiberIndex &k) const;
    // a_k / pi.
    [[nodiscard]] PuiseuxPoly coefficient(const FiberIndex &k) const;

    // Adds c to the numerator at k. InvalidIndex outside the box.
    void add(const FiberIndex &k, const PuiseuxPoly &c);
    // Adds c (a true coefficient, not a numerator) at k.
    void add_coefficient(const FiberIndex &k, const PuiseuxPoly &c);

    // Same series in a larger box.
    [[nodiscard]] FiberSeries with_bound(std::int64_t bound) const;
    // Same series written over a different single-term denominator.
    [[nodiscard]] FiberSeries with_pi(const PuiseuxPoly &pi) const;

    friend bool operator==(const FiberSeries &, const FiberSeries &) = default;

private:
    std::size_t m_d;
    std::int64_t m_bound;
    PuiseuxPoly m_pi;
    CoeffMap m_coeffs;
};

// Equality of the represented fractions, independent of the chosen pi.
bool same_series(const FiberSeries &a, const FiberSeries &b);

// n != 0 with some coordinate prime to p.
bool is_lambda_index(const FiberIndex &n, std::uint32_t p);
// Writes k = p^j n with n in Lambda; k must be nonzero and nonnegative.
std::pair<FiberIndex, unsigned> lambda_reduce(const FiberIndex &k, std::uint32_t p);

struct BranchSequence {
    FiberIndex n;
    // True coefficients a_{p^k n} / pi for k = 0..len-1, zeros included.
    std::vector<PuiseuxPoly> entries;
};

// One branch per Lambda-class present in f, in index order of n. The
// constant term (k = 0) is not part of any branch.
std::vector<BranchSequence> lambda_decompose(const FiberSeries &f);

// sum_{k=0}^{m} (a_{p^k n} / pi)^{1/p^k}, stopping at the edge of the box.
PuiseuxPoly frobenius_section(const FiberSeries &f, const FiberIndex &n, unsigned m);
// Section at the depth where it stabilises.
PuiseuxPoly full_section(const FiberSeries &f, const FiberIndex &n);
// Number of k with p^k n inside the box.
unsigned branch_length(const FiberIndex &n, std::uint32_t p, std::int64_t bound);

// f + (g^p - g) over the denominator of f. Terms of g^p beyond the box are
// dropped, or BoundOverflow is thrown when strict is set.
FiberSeries as_twist(const FiberSeries &f, const FiberSeries &g, bool strict = false);
// Whether every index of g^p stays inside the box of f.
bool twist_fits(const FiberSeries &f, const FiberSeries &g);

// Coefficientwise product; pi is the product of the denominators.
FiberSeries hadamard(const FiberSeries &f, const FiberSeries &g);

// sum_{k : p^k n in box} x^{p^k n} with pi = 1.
FiberSeries geometric_as_branch(std::uint32_t p, std::size_t e, const FiberIndex &n, std::int64_t bound);

} // namespace molly

#endif
