#include <benchmark/benchmark.h>

#include <molly/ffield.hpp>
#include <molly/lrr.hpp>
#include <molly/mollify.hpp>
#include <molly/np.hpp>
#include <molly/polygon.hpp>

#include <random>

namespace
{

using namespace molly;

PuiseuxPoly mono(std::uint32_t p, std::int64_t c, Exponents exps)
{
    const std::size_t e = exps.size();
    return PuiseuxPoly::monomial(p, e, c, std::move(exps));
}

// x^{p^k}/s terms down a single branch, plus t x / s.
FiberSeries tower(std::uint32_t p, unsigned depth)
{
    std::int64_t top = 1;
    for (unsigned i = 0; i < depth; ++i) {
        top *= p;
    }
    FiberSeries h(1, top, mono(p, 1, {1, 0}));
    for (std::int64_t k = p; k <= top; k *= p) {
        h.add({k}, mono(p, 1, {0, 0}));
    }
    h.add({1}, mono(p, 1, {0, 1}));
    return h;
}

void BM_Envelope(benchmark::State &state)
{
    std::mt19937_64 rng(1);
    std::vector<Line> lines;
    for (int i = 0; i < state.range(0); ++i) {
        lines.push_back(Line{Rational(static_cast<std::int64_t>(rng() % 200) - 100, 7),
                             Rational(static_cast<std::int64_t>(rng() % 40) - 20, 3)});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(envelope(lines, Interval{}));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Envelope)->RangeMultiplier(4)->Range(8, 2048)->Complexity(benchmark::oNLogN);

void BM_Npinf(benchmark::State &state)
{
    const FiberSeries h = tower(2, static_cast<unsigned>(state.range(0)));
    const ToricValuation v({Rational(5), Rational(1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(npinf(h, v));
    }
}
BENCHMARK(BM_Npinf)->DenseRange(2, 8, 2);

void BM_MollifyMinimal(benchmark::State &state)
{
    const FiberSeries h = tower(2, static_cast<unsigned>(state.range(0)));
    const ToricValuation v({Rational(5), Rational(1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(mollify_minimal(h, v));
    }
}
BENCHMARK(BM_MollifyMinimal)->DenseRange(2, 8, 2);

void BM_AdditiveKernel(benchmark::State &state)
{
    const ExtField F = ExtField::build(2, 1);
    // X + X^2 + X^8: kernel spread over an extension.
    const AdditivePolynomial P{F, {F.one(), F.one(), F.zero(), F.one()}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(additive_kernel(P, kMaxExtDegree));
    }
}
BENCHMARK(BM_AdditiveKernel);

void BM_Telescope(benchmark::State &state)
{
    const ExtField F = ExtField::build(3, 4);
    const std::vector<GfElement> z{F.one(), F.generator()};
    const AdditivePolynomial d = subspace_polynomial(F, z);
    const std::vector<GfElement> lambda{F.generator(), F.from_index(17)};
    const auto b = closed_form(F, z, lambda, RecurrenceKind::LRR, 14);
    for (auto _ : state) {
        benchmark::DoNotOptimize(telescope_identity(d, b, 0, 10));
    }
}
BENCHMARK(BM_Telescope);

} // namespace

BENCHMARK_MAIN();
