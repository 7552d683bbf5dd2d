#include <gffmod/model.hpp>
#include <gffmod/verdict.hpp>

#include <benchmark/benchmark.h>

#include <filesystem>

using namespace gffmod;

namespace {

const std::filesystem::path kModels = GFFMOD_MODELS_DIR;

void BM_OrbitDuality(benchmark::State& state) {
    const FieldModel m = load_model(kModels / "transverse_d4.json");
    VerdictOptions opts;
    opts.depth = static_cast<int>(state.range(0));
    opts.exhaustive = true;
    for (auto _ : state) benchmark::DoNotOptimize(duality_verdict(m, opts));
}
BENCHMARK(BM_OrbitDuality)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Check(benchmark::State& state) {
    const FieldModel m = load_model(kModels / "spacelike_d3_massless.json");
    for (auto _ : state) benchmark::DoNotOptimize(covariance_and_cgma_verdict(m));
}
BENCHMARK(BM_Check)->Unit(benchmark::kMillisecond);

}  // namespace
