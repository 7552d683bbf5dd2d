#include <gffmod/parser.hpp>
#include <gffmod/roots.hpp>

#include <benchmark/benchmark.h>

using namespace gffmod;

namespace {

// Cycles through mixed real and complex factors until the degree is reached.
RationalUPoly test_poly(int degree) {
    RationalUPoly p(RationalVector{1});
    const RationalUPoly factors[] = {
        RationalUPoly(RationalVector{1, 0, 1}),
        RationalUPoly(RationalVector{Rational(-1, 2), 1}),
        RationalUPoly(RationalVector{3, 1}),
        RationalUPoly(RationalVector{5, -2, 1}),
    };
    for (int k = 0; p.degree() < degree; ++k) p = p * factors[k % 4];
    return p;
}

void BM_Sturm(benchmark::State& state) {
    const RationalUPoly p = test_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sturm_real_count(p));
}
BENCHMARK(BM_Sturm)->Arg(4)->Arg(8)->Arg(16);

void BM_Aberth(benchmark::State& state) {
    const RationalUPoly p = test_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_roots(p));
}
BENCHMARK(BM_Aberth)->Arg(4)->Arg(8)->Arg(16);

void BM_RootProfile(benchmark::State& state) {
    const ShellForm f = to_shell_form(parse_polynomial("(p0 - 2*p2)^2 + p1^2*p3^2", 4), 1);
    const RationalVector phat{Rational(1, 2), Rational(-3, 4)};
    for (auto _ : state) benchmark::DoNotOptimize(root_profile(f, phat));
}
BENCHMARK(BM_RootProfile);

}  // namespace
