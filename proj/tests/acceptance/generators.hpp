#ifndef MOLLY_ACCEPTANCE_GENERATORS_HPP
#define MOLLY_ACCEPTANCE_GENERATORS_HPP

#include <molly/perfring.hpp>
#include <molly/series.hpp>
#include <molly/valuation.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace molly::acceptance
{

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : m_rng(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(m_rng);
    }
    bool coin(double p = 0.5)
    {
        return std::bernoulli_distribution(p)(m_rng);
    }
    template <class T> const T &pick(const std::vector<T> &v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
    }
    std::uint32_t prime()
    {
        return pick(std::vector<std::uint32_t>{2, 3, 5});
    }
    std::int64_t unit(std::uint32_t p)
    {
        return uniform(1, p - 1);
    }

    // n / p^j with n in [lo, hi] and j <= max_j.
    Rational puiseux_exponent(std::uint32_t p, std::int64_t lo, std::int64_t hi, unsigned max_j)
    {
        std::int64_t den = 1;
        for (auto j = uniform(0, max_j); j > 0; --j) {
            den *= p;
        }
        return Rational(uniform(lo * den, hi * den), den);
    }

    PuiseuxPoly monomial(std::uint32_t p, const Exponents &exps)
    {
        return PuiseuxPoly::monomial(p, exps.size(), unit(p), exps);
    }

    // Polynomial (exponents in 0..max_deg) with 1..max_terms terms.
    PuiseuxPoly polynomial(std::uint32_t p, std::size_t e, std::int64_t max_deg, int max_terms)
    {
        PuiseuxPoly f(p, e);
        for (auto n = uniform(1, max_terms); n > 0; --n) {
            Exponents exps(e);
            for (auto &x : exps) {
                x = Rational(uniform(0, max_deg));
            }
            f += monomial(p, exps);
        }
        return f;
    }

    // Puiseux polynomial, exponents n / p^j in [lo, hi].
    PuiseuxPoly puiseux(std::uint32_t p, std::size_t e, std::int64_t lo, std::int64_t hi, int max_terms)
    {
        PuiseuxPoly f(p, e);
        for (auto n = uniform(1, max_terms); n > 0; --n) {
            Exponents exps(e);
            for (auto &x : exps) {
                x = puiseux_exponent(p, lo, hi, 1);
            }
            f += monomial(p, exps);
        }
        return f;
    }

    // pi: integral exponents, positive in at least one of `allowed`.
    PuiseuxPoly pi(std::uint32_t p, std::size_t e, const std::vector<std::size_t> &allowed, std::int64_t max_exp)
    {
        Exponents exps(e, Rational(0));
        for (auto i : allowed) {
            exps[i] = Rational(uniform(0, max_exp));
        }
        exps[pick(allowed)] = Rational(uniform(1, max_exp));
        return monomial(p, exps);
    }

    FiberIndex index(std::size_t d, std::int64_t bound, bool nonzero = true)
    {
        FiberIndex k(d);
        do {
            for (auto &x : k) {
                x = uniform(0, bound);
            }
        } while (nonzero && std::all_of(k.begin(), k.end(), [](std::int64_t x) { return x == 0; }));
        return k;
    }

    // f / pi with polynomial numerators; indices biased towards p-power
    // multiples so that branches have several entries.
    FiberSeries series(std::uint32_t p, std::size_t e, std::size_t d, std::int64_t bound, const PuiseuxPoly &pi,
                       std::int64_t max_deg, int max_terms)
    {
        FiberSeries f(d, bound, pi);
        for (auto n = uniform(1, max_terms); n > 0; --n) {
            FiberIndex k = index(d, bound);
            if (coin()) {
                for (auto &x : k) {
                    while (x * static_cast<std::int64_t>(p) <= bound && coin(0.6)) {
                        x *= p;
                    }
                }
                if (std::all_of(k.begin(), k.end(), [](std::int64_t x) { return x == 0; })) {
                    k[0] = 1;
                }
            }
            f.add(k, polynomial(p, e, max_deg, 2));
        }
        return f;
    }

    std::vector<Rational> weights(std::size_t e)
    {
        std::vector<Rational> w(e);
        for (auto &x : w) {
            x = Rational(uniform(1, 12), uniform(1, 3));
        }
        return w;
    }

    std::mt19937_64 &engine() noexcept
    {
        return m_rng;
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace molly::acceptance

#endif
