#include <benchmark/benchmark.h>

#include "bergstab/enumeration.hpp"

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

void BM_EnumerateBall(benchmark::State& state) {
    GroupSpec g = schottky();
    int max_len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        EnumerationBall ball = enumerate_ball(g, max_len);
        benchmark::DoNotOptimize(ball.elements.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(reduced_word_count(2, max_len)));
}
BENCHMARK(BM_EnumerateBall)->Arg(6)->Arg(8)->Arg(10);

void BM_EnumerateBallPruned(benchmark::State& state) {
    GroupSpec g = schottky();
    EnumerationOptions opts;
    opts.prune = true;
    opts.prune_tol = 1e-10;
    int max_len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        EnumerationBall ball = enumerate_ball(g, max_len, opts);
        benchmark::DoNotOptimize(ball.elements.data());
    }
}
BENCHMARK(BM_EnumerateBallPruned)->Arg(8)->Arg(10);

} // namespace
