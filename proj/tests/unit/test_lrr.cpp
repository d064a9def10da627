#include "support.hpp"

#include <doctest.h>
#include <molly/lrr.hpp>

#include <random>

using namespace molly;
using molly::test::mono;

TEST_CASE("verify examples")
{
    const ExtField F = ExtField::build(3, 1);
    const FieldDomain dom{&F};
    const std::vector<GfElement> ones(6, F.one());
    const std::vector<GfElement> c{F.one(), F.neg(F.one())};
    CHECK(verify_lrr(dom, std::span<const GfElement>(ones), std::span<const GfElement>(c)));
    CHECK_THROWS_WITH_AS(verify_lrr(dom, std::span<const GfElement>(ones).first(1), std::span<const GfElement>(c)),
                         doctest::Contains("TooShort"), Error);
}

TEST_CASE("closed forms satisfy their recurrences, perturbations do not")
{
    std::mt19937_64 rng(17);
    for (auto [p, m] : {std::pair{2u, 2u}, std::pair{2u, 4u}, std::pair{3u, 2u}, std::pair{3u, 3u}}) {
        const ExtField F = ExtField::build(p, m);
        const FieldDomain dom{&F};
        for (unsigned n = 1; n <= std::min(3u, m); ++n) {
            // Independent roots: the first n power-basis vectors.
            std::vector<GfElement> z;
            for (unsigned i = 0; i < n; ++i) {
                GfElement b;
                b.c[i] = 1;
                z.push_back(b);
            }
            const AdditivePolynomial P = subspace_polynomial(F, z);
            std::vector<GfElement> reversed(P.coeffs.rbegin(), P.coeffs.rend());
            std::vector<GfElement> lambda;
            for (unsigned i = 0; i < n; ++i) {
                lambda.push_back(F.from_index(1 + rng() % (F.order() - 1)));
            }
            auto seq = closed_form(F, z, lambda, RecurrenceKind::LRR, 10);
            CHECK(verify_lrr(dom, std::span<const GfElement>(seq), std::span<const GfElement>(P.coeffs)));
            seq[4] = F.add(seq[4], F.one());
            CHECK_FALSE(verify_lrr(dom, std::span<const GfElement>(seq), std::span<const GfElement>(P.coeffs)));

            // rLRR: the root space of the reversed polynomial.
            AdditivePolynomial Q{F, reversed};
            if (F.is_zero(Q.coeffs.front())) {
                continue;
            }
            try {
                const AdditiveKernel ker = additive_kernel(Q, 12 / m);
                const ExtField &L = ker.field;
                std::vector<GfElement> lam;
                for (unsigned i = 0; i < n; ++i) {
                    lam.push_back(L.from_index(1 + rng() % (L.order() - 1)));
                }
                const auto rseq = closed_form(L, ker.basis, lam, RecurrenceKind::RLRR, 10);
                std::vector<GfElement> lifted;
                for (const auto &c : P.coeffs) {
                    lifted.push_back(ker.embedding(c));
                }
                CHECK(verify_rlrr(FieldDomain{&L}, std::span<const GfElement>(rseq), std::span<const GfElement>(lifted)));
            } catch (const Error &e) {
                CHECK(e.code() == ErrorCode::KernelNotFound);
            }
        }
    }
}

TEST_CASE("telescoping identity over F_4")
{
    const ExtField F2 = ExtField::build(2, 1);
    const ExtField F4 = ExtField::build(2, 2);
    const AdditivePolynomial d{F4, {F4.one(), F4.one()}};
    (void)F2;
    for (const auto &lambda : F4.elements()) {
        const std::vector<GfElement> z{F4.one()};
        const std::vector<GfElement> lam{lambda};
        const auto b = closed_form(F4, z, lam, RecurrenceKind::LRR, 12);
        for (std::size_t n = 0; n < 10; ++n) {
            for (std::size_t n2 = n + 1; n2 <= 10; ++n2) {
                const TelescopeResult r = telescope_identity(d, b, n, n2);
                CHECK(r.equal);
            }
        }
    }
    const std::vector<GfElement> zeros(12, F4.zero());
    const TelescopeResult r = telescope_identity(d, zeros, 2, 5);
    CHECK(F4.is_zero(r.lhs));
    CHECK(F4.is_zero(r.rhs));

    std::vector<GfElement> broken = closed_form(F4, std::vector<GfElement>{F4.one()},
                                                std::vector<GfElement>{F4.generator()}, RecurrenceKind::LRR, 12);
    broken[3] = F4.add(broken[3], F4.generator());
    CHECK_THROWS_WITH_AS(telescope_identity(d, broken, 0, 5), doctest::Contains("RecurrenceViolated"), Error);
}

TEST_CASE("telescope helper additivity")
{
    std::mt19937_64 rng(1);
    const ExtField F = ExtField::build(3, 2);
    const AdditivePolynomial d{F, {F.generator(), F.one(), F.from_int(2), F.one()}};
    for (int i = 0; i < 50; ++i) {
        std::vector<GfElement> x;
        std::vector<GfElement> y;
        std::vector<GfElement> sum;
        for (int j = 0; j < 3; ++j) {
            x.push_back(F.from_index(rng() % 9));
            y.push_back(F.from_index(rng() % 9));
            sum.push_back(F.add(x.back(), y.back()));
        }
        CHECK(telescope_f(d, sum) == F.add(telescope_f(d, x), telescope_f(d, y)));
        CHECK(telescope_g(d, sum) == F.add(telescope_g(d, x), telescope_g(d, y)));
    }
}

TEST_CASE("rLRR extraction: geometric Frobenius series")
{
    const std::uint32_t p = 3;
    std::vector<PuiseuxPoly> a(8, mono(p, {"0"}));
    const UniPoly b{{1, -mono(p, {"0"})}};
    const std::vector<UniPoly> bi{{{0, -mono(p, {"0"})}}, {{0, mono(p, {"0"})}}};
    const RlrrExtraction r = extract_rlrr(b, bi, a);
    CHECK(r.c == std::vector<PuiseuxPoly>{-mono(p, {"0"}), mono(p, {"0"})});
    CHECK(r.N == 1);
    CHECK_FALSE(r.degenerate);
    CHECK(r.verified);
    // Unreversed reading: -a_i^p + a_{i+1} = 0.
    CHECK(verify_rlrr(PuiseuxDomain{p, 1}, std::span<const PuiseuxPoly>(a), std::span<const PuiseuxPoly>(r.c)));

    std::vector<PuiseuxPoly> wrong = a;
    wrong[2] = mono(p, {"0"}, 2);
    CHECK_THROWS_WITH_AS(extract_rlrr(b, bi, wrong), doctest::Contains("RelationFails"), Error);
    CHECK_THROWS_WITH_AS(extract_rlrr(b, bi, std::vector<PuiseuxPoly>(a.begin(), a.begin() + 2)),
                         doctest::Contains("TruncationTooShallow"), Error);
}

TEST_CASE("rLRR extraction: sum of s^{p^k} X^{p^k}")
{
    const std::uint32_t p = 2;
    std::vector<PuiseuxPoly> a;
    for (int k = 0; k < 12; ++k) {
        a.push_back(PuiseuxPoly::variable(p, 1, 0, Rational(1 << k)));
    }
    // f^2 - f = -s X.
    const UniPoly b{{1, -mono(p, {"1"})}};
    const std::vector<UniPoly> bi{{{0, -mono(p, {"0"})}}, {{0, mono(p, {"0"})}}};
    const RlrrExtraction r = extract_rlrr(b, bi, a);
    CHECK(r.N == 1);
    CHECK(r.verified);
    CHECK(a.size() - r.N >= 10);

    // b_n with zero constant term: flagged.
    const UniPoly b2{{1, -mono(p, {"1"})}};
    const std::vector<UniPoly> degenerate{{{0, -mono(p, {"0"})}}, {{0, mono(p, {"0"})}}, {}};
    const RlrrExtraction r2 = extract_rlrr(b2, degenerate, a);
    CHECK(r2.degenerate);
}

TEST_CASE("branch algebraicity")
{
    std::mt19937_64 rng(4);
    FiberSeries f(3, 1, 2, 9);
    for (int i = 0; i < 20; ++i) {
        f.add({static_cast<std::int64_t>(rng() % 10), static_cast<std::int64_t>(rng() % 10)},
              PuiseuxPoly::variable(3, 1, 0, static_cast<std::int64_t>(rng() % 4)));
    }
    for (const auto &branch : lambda_decompose(f)) {
        CHECK(branch_algebraicity_check(f, branch.n));
    }
}
