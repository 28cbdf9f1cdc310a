#include "mubar/link.hpp"
#include "mubar/longitudes.hpp"
#include "mubar/milnor.hpp"
#include "mubar/operators.hpp"

#include <benchmark/benchmark.h>

using namespace mubar;

namespace {

PDCode doubled_borromean() {
    const BraidWord br = BraidWord::parse("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3);
    return bing_double(closure_diagram(br)).relabeled_sequential();
}

} // namespace

// End-to-end anchor: Bing double of the borromean-style braid closure, then
// the exhaustive first-nonvanishing scan through length 6.
static void BM_DoubledScanLength6(benchmark::State& state) {
    const PDCode bd = doubled_borromean();
    for (auto _ : state) {
        const PeripheralData data = wirtinger_peripheral(bd, 7);
        auto hit = first_nonvanishing(data, 6);
        benchmark::DoNotOptimize(hit);
        if (!hit || hit->length != 6) state.SkipWithError("wrong scan result");
    }
}
BENCHMARK(BM_DoubledScanLength6)->Unit(benchmark::kMillisecond);

static void BM_WirtingerPeripheral(benchmark::State& state) {
    const int bound = static_cast<int>(state.range(0));
    const PDCode wh = twisted_whitehead(1).relabeled_sequential();
    for (auto _ : state) {
        const PeripheralData data = wirtinger_peripheral(wh, bound);
        benchmark::DoNotOptimize(data);
    }
}
BENCHMARK(BM_WirtingerPeripheral)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BraidPeripheral(benchmark::State& state) {
    const int bound = static_cast<int>(state.range(0));
    const BraidWord c = braid_commutator_link();
    for (auto _ : state) {
        const PeripheralData data = braid_peripheral(c, bound);
        benchmark::DoNotOptimize(data);
    }
}
BENCHMARK(BM_BraidPeripheral)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_MuTableWhitehead(benchmark::State& state) {
    const PDCode wh = twisted_whitehead(1).relabeled_sequential();
    const PeripheralData data = wirtinger_peripheral(wh, 5);
    for (auto _ : state) {
        MuTable table(data, 4);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_MuTableWhitehead)->Unit(benchmark::kMillisecond);
