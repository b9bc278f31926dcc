#include <benchmark/benchmark.h>

#include "bergstab/kernels.hpp"

namespace {

using namespace bergstab;

GroupSpec schottky() {
    GroupSpec g;
    g.model = Model::disc;
    g.generators.push_back(MoebiusMap::create(1.0, 0.8, 0.8, 1.0, Model::disc));
    g.generators.push_back(
        MoebiusMap::create(1.0, Complex{0.0, 0.8}, Complex{0.0, -0.8}, 1.0, Model::disc));
    g.asserted_free_discrete = true;
    g.asserted_convergence_type = true;
    return g;
}

void BM_KernelSeries(benchmark::State& state) {
    GroupSpec g = schottky();
    SeriesOptions opts;
    opts.max_len = static_cast<int>(state.range(0));
    QuotientSeries series(g, full_group_predicate(), opts);
    ModelPoint z = disc_point({0.3, 0.1}), w = disc_point({-0.2, 0.25});
    for (auto _ : state) {
        KernelValue k = series.kernel(z, w);
        benchmark::DoNotOptimize(k.value);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(series.members().size()));
}
BENCHMARK(BM_KernelSeries)->Arg(6)->Arg(8)->Arg(10);

void BM_GreenSeries(benchmark::State& state) {
    GroupSpec g = schottky();
    SeriesOptions opts;
    opts.max_len = static_cast<int>(state.range(0));
    QuotientSeries series(g, full_group_predicate(), opts);
    ModelPoint z = disc_point({0.3, 0.1}), w = disc_point({-0.2, 0.25});
    for (auto _ : state) {
        GreenValue gv = series.green(z, w);
        benchmark::DoNotOptimize(gv.value);
    }
}
BENCHMARK(BM_GreenSeries)->Arg(6)->Arg(8);

void BM_SeriesConstruction(benchmark::State& state) {
    GroupSpec g = schottky();
    SeriesOptions opts;
    opts.max_len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        QuotientSeries series(g, full_group_predicate(), opts);
        benchmark::DoNotOptimize(series.members().data());
    }
}
BENCHMARK(BM_SeriesConstruction)->Arg(8);

} // namespace
