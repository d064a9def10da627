#ifndef MOLLY_FFIELD_HPP
#define MOLLY_FFIELD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace molly
{

inline constexpr unsigned kMaxPrime = 17;
inline constexpr unsigned kMaxExtDegree = 12;

bool is_prime(std::uint32_t n) noexcept;

// The fixed characteristic. Construction fails for composites (NotPrime)
// and for primes outside 2..17 (UnsupportedPrime).
class PrimeConfig
{
public:
    explicit PrimeConfig(std::uint32_t p);

    [[nodiscard]] std::uint32_t p() const noexcept
    {
        return m_p;
    }

    friend bool operator==(const PrimeConfig &, const PrimeConfig &) noexcept = default;

private:
    std::uint32_t m_p;
};

// Element of F_{p^m} in the power basis 1, g, ..., g^{m-1} of the field's
// generator. Unused trailing slots are zero, so elements of one field
// compare by value.
struct GfElement {
    std::array<std::uint8_t, kMaxExtDegree> c{};

    friend bool operator==(const GfElement &, const GfElement &) noexcept = default;
    friend auto operator<=>(const GfElement &, const GfElement &) noexcept = default;
};

// Dense polynomial over F_p, lowest degree first, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

// Rabin-style test: deg m monic f is irreducible iff f | X^{p^m} - X and
// gcd(f, X^{p^k} - X) = 1 for every proper divisor k of m.
bool is_irreducible(std::uint32_t p, const FpPoly &monic);

// F_{p^m} = F_p[X]/(modulus).
class ExtField
{
public:
    // Lexicographically least monic irreducible of degree m, ordering
    // moduli by the base-p integer sum c_i p^i of their low coefficients.
    static ExtField build(std::uint32_t p, unsigned m);

    // Explicit modulus (monic, low degree first). Verified irreducible.
    ExtField(std::uint32_t p, FpPoly modulus);

    [[nodiscard]] std::uint32_t p() const noexcept
    {
        return m_p;
    }
    [[nodiscard]] unsigned degree() const noexcept
    {
        return m_m;
    }
    [[nodiscard]] std::uint64_t order() const noexcept
    {
        return m_order;
    }
    [[nodiscard]] const FpPoly &modulus() const noexcept
    {
        return m_modulus;
    }

    [[nodiscard]] GfElement zero() const noexcept
    {
        return {};
    }
    [[nodiscard]] GfElement one() const noexcept;
    // Class of X; zero when m = 1 with modulus X.
    [[nodiscard]] GfElement generator() const noexcept;
    [[nodiscard]] GfElement from_int(std::int64_t v) const noexcept;
    [[nodiscard]] GfElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    // Bijection {0..order-1} <-> field, digits are power-basis coordinates.
    [[nodiscard]] GfElement from_index(std::uint64_t index) const;
    [[nodiscard]] std::uint64_t index(const GfElement &a) const noexcept;

    [[nodiscard]] bool is_zero(const GfElement &a) const noexcept
    {
        return a == GfElement{};
    }

    [[nodiscard]] GfElement add(const GfElement &a, const GfElement &b) const noexcept;
    [[nodiscard]] GfElement sub(const GfElement &a, const GfElement &b) const noexcept;
    [[nodiscard]] GfElement neg(const GfElement &a) const noexcept;
    [[nodiscard]] GfElement mul(const GfElement &a, const GfElement &b) const noexcept;
    [[nodiscard]] GfElement scale(const GfElement &a, std::uint32_t s) const noexcept;
    [[nodiscard]] GfElement pow(GfElement a, std::uint64_t e) const noexcept;
    // Throws ZeroDenominator for 0.
    [[nodiscard]] GfElement inv(const GfElement &a) const;

    // a^p.
    [[nodiscard]] GfElement frobenius(const GfElement &a) const noexcept;
    // a^{p^k}; k may exceed m.
    [[nodiscard]] GfElement frobenius(const GfElement &a, unsigned k) const noexcept;
    // Unique b with b^p = a, computed as a^{p^{m-1}}.
    [[nodiscard]] GfElement p_root(const GfElement &a) const noexcept;
    // a^{1/p^k}.
    [[nodiscard]] GfElement p_root(const GfElement &a, unsigned k) const noexcept;

    // All elements in index order. Only sensible for small fields.
    [[nodiscard]] std::vector<GfElement> elements() const;

    [[nodiscard]] std::string to_string(const GfElement &a) const;

    friend bool operator==(const ExtField &a, const ExtField &b) noexcept
    {
        return a.m_p == b.m_p && a.m_modulus == b.m_modulus;
    }

private:
    std::uint32_t m_p;
    unsigned m_m;
    std::uint64_t m_order;
    FpPoly m_modulus;
};

// Field embedding F_{p^m} -> F_{p^{mj}} fixed by the image of the small
// field's generator (a root of its modulus in the large field).
class FieldEmbedding
{
public:
    // Picks the root of smallest index, so the choice is reproducible.
    FieldEmbedding(const ExtField &source, const ExtField &target);

    [[nodiscard]] GfElement operator()(const GfElement &a) const;

    [[nodiscard]] const ExtField &source() const noexcept
    {
        return m_source;
    }
    [[nodiscard]] const ExtField &target() const noexcept
    {
        return m_target;
    }
    [[nodiscard]] const GfElement &generator_image() const noexcept
    {
        return m_image;
    }

private:
    ExtField m_source;
    ExtField m_target;
    GfElement m_image;
};

// Roots in `field` of a polynomial with coefficients in `field` (low degree
// first), sorted by index, without multiplicity.
std::vector<GfElement> roots_in_field(const ExtField &field, std::vector<GfElement> poly);

// Basis of the right null space of a rows x cols matrix over F_p (row-major).
std::vector<std::vector<std::uint32_t>> nullspace_mod_p(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows,
                                                        std::size_t cols);

// P(X) = sum_i c_i X^{p^i} with c_i in `field`.
struct AdditivePolynomial {
    ExtField field;
    std::vector<GfElement> coeffs;

    // n, the index of the top coefficient; -1 for the empty polynomial.
    [[nodiscard]] int height() const noexcept
    {
        return static_cast<int>(coeffs.size()) - 1;
    }
    [[nodiscard]] GfElement evaluate(const GfElement &x) const;
    // Same polynomial with coefficients pushed through an embedding.
    [[nodiscard]] AdditivePolynomial embedded(const FieldEmbedding &embedding) const;
};

struct AdditiveKernel {
    ExtField field;
    // Embedding of the coefficient field into `field`.
    FieldEmbedding embedding;
    // F_p-basis of {x in field : P(x) = 0}.
    std::vector<GfElement> basis;
    // j with [field : coefficient field] = j.
    unsigned extension_steps;
};

// Searches F_{p^{m j}}, j = 1..search_bound, for the first field in which
// the F_p-linear map x -> P(x) has an n-dimensional kernel. Requires
// c_0 != 0 and c_n != 0. Throws KernelNotFound (search exhausted) or
// DegreeTooLarge (m j would exceed 12).
AdditiveKernel additive_kernel(const AdditivePolynomial &poly, unsigned search_bound);

// prod_{b in span(basis)} (X - b) written as sum d_i X^{p^i}; d_n = 1.
// Basis vectors must be F_p-independent.
AdditivePolynomial subspace_polynomial(const ExtField &field, std::span<const GfElement> basis);

} // namespace molly

#endif
