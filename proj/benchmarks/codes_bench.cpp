#include <benchmark/benchmark.h>

#include <random>

#include "amdesign/catalog.hpp"
#include "amdesign/gf2.hpp"
#include "amdesign/parallel.hpp"

using namespace amdesign;

namespace {

BinaryCode random_code(int n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BinaryCode c = BinaryCode::zero(n);
    while (c.dimension() < k) {
        std::vector<Word> rows(static_cast<std::size_t>(k));
        for (auto& r : rows) r = rng() & full_mask(n);
        c = BinaryCode::from_rows(rows, n);
    }
    return c;
}

void BM_WeightDistribution(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const BinaryCode c = random_code(2 * k, k, 1);
    set_worker_count(static_cast<unsigned>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(c));
    set_worker_count(0);
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << k));
}
BENCHMARK(BM_WeightDistribution)->ArgsProduct({{8, 16, 20, 24}, {1, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Dual(benchmark::State& state) {
    const BinaryCode c = random_code(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(dual(c));
}
BENCHMARK(BM_Dual)->Arg(16)->Arg(32)->Arg(64);

void BM_Classify(benchmark::State& state) {
    const BinaryCode c = catalog::builtin("e8+e8");
    for (auto _ : state) benchmark::DoNotOptimize(classify(c));
}
BENCHMARK(BM_Classify);

void BM_SearchTypeOne16(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(catalog::search_type_i_16({seed++, 1000}));
}
BENCHMARK(BM_SearchTypeOne16)->Unit(benchmark::kMillisecond);

}  // namespace
