// Serial vs OpenMP comparison for the bitangency probe sweep.

#include "tropbt/classes.hpp"
#include "tropbt/intersect.hpp"
#include "tropbt/quartic.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

namespace {

tropbt::QuarticSpec load_example() {
    std::ifstream in(std::string(TROPBT_TEST_DATA) + "/worked_example.q");
    std::ostringstream os;
    os << in.rdbuf();
    return tropbt::parse_spec(os.str());
}

const tropbt::TropicalCurve& curve() {
    static const tropbt::TropicalCurve c = [] {
        auto spec = load_example();
        return tropbt::dual_curve(spec, tropbt::regular_subdivision(spec));
    }();
    return c;
}

void bench_enumerate(benchmark::State& state, bool parallel) {
    tropbt::EnumerateOptions opts;
    opts.parallel = parallel;
    for (auto _ : state) {
        auto classes = tropbt::enumerate_classes(curve(), opts);
        benchmark::DoNotOptimize(classes);
    }
}

void bench_stable_batch(benchmark::State& state) {
    for (auto _ : state) {
        long total = 0;
        for (int k = 0; k < 100; ++k) {
            tropbt::TropicalLine line{tropbt::Pt{tropbt::Rat(k, 7), tropbt::Rat(3 * k, 11)}};
            total += tropbt::stable_intersection(curve(), line).total;
        }
        benchmark::DoNotOptimize(total);
    }
}

} // namespace

BENCHMARK_CAPTURE(bench_enumerate, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_enumerate, openmp, true)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_stable_batch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
