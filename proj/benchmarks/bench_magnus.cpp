#include "mubar/series.hpp"
#include "mubar/word.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace mubar;

namespace {

Word random_word(std::mt19937& rng, int generators, int length) {
    std::uniform_int_distribution<int> gen(1, generators);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return Word(generators, std::move(letters));
}

} // namespace

static void BM_MagnusExpand(benchmark::State& state) {
    const int length = static_cast<int>(state.range(0));
    const int bound = static_cast<int>(state.range(1));
    std::mt19937 rng(42);
    const Word w = random_word(rng, 3, length);
    for (auto _ : state) {
        auto s = magnus_expand(w, bound);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * length);
}
BENCHMARK(BM_MagnusExpand)
    ->ArgsProduct({{16, 64, 256}, {3, 5}})
    ->Unit(benchmark::kMicrosecond);

static void BM_SeriesProduct(benchmark::State& state) {
    const int bound = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    const auto a = magnus_expand(random_word(rng, 3, 40), bound);
    const auto b = magnus_expand(random_word(rng, 3, 40), bound);
    for (auto _ : state) {
        auto p = a * b;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SeriesProduct)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_SeriesInverse(benchmark::State& state) {
    const int bound = static_cast<int>(state.range(0));
    std::mt19937 rng(19);
    const auto s = magnus_expand(random_word(rng, 3, 40), bound);
    for (auto _ : state) {
        auto inv = s.inverse();
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_SeriesInverse)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);
