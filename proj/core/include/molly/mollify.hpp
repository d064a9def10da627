#ifndef MOLLY_MOLLIFY_HPP
#define MOLLY_MOLLIFY_HPP

#include <molly/error.hpp>
#include <molly/np.hpp>
#include <molly/series.hpp>
#include <molly/valuation.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace molly
{

enum class MollifyCase { AlreadyAdmissible, Mollified, NegativeCertificate };

std::string_view to_string(MollifyCase c) noexcept;

// Witness that NP^(inf) < 0 for the monomial formula: the term c x^{k0}
// s^{n0} of the folded series survives every twist, and its contribution
// to the k0 / p^K branch section has value `bound`.
struct NegativeCertificate {
    // Designated base variable and the exponent of s_variable.
    std::size_t variable = 0;
    Rational n0;
    FiberIndex k0;
    // Largest K with p^K | k0; m = K so that p^{m+1} does not divide k0.
    unsigned K = 0;
    unsigned m = 0;
    Rational bound;
};

struct MollifierReport {
    // Accumulated mollifier, pi = 1.
    FiberSeries g;
    // h + (g^p - g) - absorbed_constant.
    FiberSeries twisted;
    // x-free part moved out of the series (base-only terms).
    PuiseuxPoly absorbed_constant;
    // NP after each step.
    std::vector<Rational> trace;
    Rational initial_np;
    Rational final_np;
    Rational npinf;
    MollifyCase kind = MollifyCase::AlreadyAdmissible;
    std::optional<NegativeCertificate> certificate;
};

class DivisorObstructionError : public Error
{
public:
    DivisorObstructionError(std::size_t index, std::optional<NegativeCertificate> certificate, const std::string &message)
        : Error(ErrorCode::DivisorObstruction, message), m_index(index), m_certificate(std::move(certificate))
    {
    }

    // Position in the chain (0-based) of the failing coordinate divisor.
    [[nodiscard]] std::size_t index() const noexcept
    {
        return m_index;
    }
    [[nodiscard]] const std::optional<NegativeCertificate> &certificate() const noexcept
    {
        return m_certificate;
    }

private:
    std::size_t m_index;
    std::optional<NegativeCertificate> m_certificate;
};

// p-th root of the negated leading part of h, indices divided by p.
// AlreadyOptimal if np = npinf, NotPDivisible if an attaining index is
// prime to p.
FiberSeries reduce_step(const FiberSeries &h, const ToricValuation &v);

// Upper bound on the number of reduce_step rounds: size of the value
// window of pi over the coordinate monomials at depth ceil(log_p D).
std::size_t mollify_step_bound(const FiberSeries &h, const ToricValuation &v);

// Repeats reduce_step until np = npinf.
MollifierReport mollify_minimal(const FiberSeries &h, const ToricValuation &v, std::size_t max_steps = 10000);

// Explicit mollifier for f/pi, pi = c s_j^alpha pi' with v(pi') = 0, by
// folding each chain b_n, b_{pn}, ... of negative s_j-powers onto its most
// negative member. Either reaches np = 0 or returns a NegativeCertificate.
MollifierReport mollify_monomial(const FiberSeries &f, const ToricValuation &v, const std::vector<std::size_t> &designated);

// Clears the denominator one coordinate divisor at a time, last coordinate
// of the chain first. An empty chain means every coordinate dividing pi.
// Throws DivisorObstructionError when some NP^(inf) at a divisor is < 0.
MollifierReport divisor_chain_mollify(const FiberSeries &f, std::vector<std::size_t> chain = {});

} // namespace molly

#endif
