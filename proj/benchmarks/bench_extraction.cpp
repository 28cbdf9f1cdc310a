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

Monomial random_monomial(std::mt19937& rng, int vars, int degree) {
    std::uniform_int_distribution<int> pick(1, vars);
    Monomial m;
    for (int k = 0; k < degree; ++k) m.indices.push_back(pick(rng));
    return m;
}

} // namespace

static void BM_CoefficientDP(benchmark::State& state) {
    const int length = static_cast<int>(state.range(0));
    const int degree = static_cast<int>(state.range(1));
    std::mt19937 rng(1234);
    const Word w = random_word(rng, 4, length);
    const Monomial m = random_monomial(rng, 4, degree);
    for (auto _ : state) {
        auto c = magnus_coefficient_dp(w, m);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * length * degree);
}
BENCHMARK(BM_CoefficientDP)
    ->ArgsProduct({{64, 512, 4096}, {3, 5, 7}})
    ->Unit(benchmark::kMicrosecond);

static void BM_CoefficientFull(benchmark::State& state) {
    const int length = static_cast<int>(state.range(0));
    const int degree = static_cast<int>(state.range(1));
    std::mt19937 rng(1234);
    const Word w = random_word(rng, 4, length);
    const Monomial m = random_monomial(rng, 4, degree);
    for (auto _ : state) {
        auto c = magnus_coefficient_full(w, m);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CoefficientFull)
    ->ArgsProduct({{64, 512}, {3, 5}})
    ->Unit(benchmark::kMicrosecond);
