#include <gffmod/modular.hpp>
#include <gffmod/parser.hpp>

#include <benchmark/benchmark.h>

#include <memory>

using namespace gffmod;

namespace {

std::shared_ptr<const Lattice> lattice_of(const char* M) {
    return std::make_shared<const Lattice>(to_shell_form(parse_polynomial(M, 4), 1));
}

void BM_LatticeBuild(benchmark::State& state) {
    const ShellForm f = to_shell_form(parse_polynomial("p0^2", 4), 1);
    for (auto _ : state) benchmark::DoNotOptimize(Lattice(f));
}
BENCHMARK(BM_LatticeBuild)->Unit(benchmark::kMillisecond);

void BM_Flow(benchmark::State& state) {
    const auto lat = lattice_of("p0^2");
    const LatticeState phi = random_state(lat, 1, 65, 191);
    for (auto _ : state) benchmark::DoNotOptimize(apply_flow(phi, 16));
}
BENCHMARK(BM_Flow)->Unit(benchmark::kMillisecond);

void BM_Conjugation(benchmark::State& state) {
    const auto lat = lattice_of("p0^2");
    const LatticeState phi = random_state(lat, 1, 65, 191);
    for (auto _ : state) benchmark::DoNotOptimize(apply_conjugation(phi));
}
BENCHMARK(BM_Conjugation)->Unit(benchmark::kMillisecond);

}  // namespace
