#include <benchmark/benchmark.h>

#include "zetac/dominance.hpp"
#include "zetac/eval.hpp"
#include "zetac/parser.hpp"
#include "zetac/polar.hpp"
#include "zetac/printer.hpp"
#include "zetac/simplify.hpp"

using namespace zetac;

namespace {

const char* kMixedExpr = "n*log(n) + i*n^2";

void BM_Parse(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse(kMixedExpr));
    }
}
BENCHMARK(BM_Parse);

void BM_Evaluate(benchmark::State& state) {
    const ExprPtr f = parse(kMixedExpr);
    std::int64_t n = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(f, n));
        n = n < (1 << 20) ? n * 2 : 2;
    }
}
BENCHMARK(BM_Evaluate);

void BM_DecomposeTrajectory(benchmark::State& state) {
    const ExprPtr f = parse(kMixedExpr);
    const SampleSchedule sched = default_schedule();
    for (auto _ : state) {
        benchmark::DoNotOptimize(trajectory(f, sched));
    }
}
BENCHMARK(BM_DecomposeTrajectory);

void BM_CompareModulus(benchmark::State& state) {
    const ExprPtr f1 = parse(kMixedExpr);
    const ExprPtr f2 = parse("n^2");
    const SampleSchedule sched = default_schedule();
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare_modulus(f1, f2, sched));
    }
}
BENCHMARK(BM_CompareModulus);

void BM_SimplifyAffinePeel(benchmark::State& state) {
    const ExprPtr f = parse("((2*n + 3) - 3)/2 + (n^2 - n^2) + 0*log(n)");
    for (auto _ : state) {
        benchmark::DoNotOptimize(simplify(f));
    }
}
BENCHMARK(BM_SimplifyAffinePeel);

void BM_PrintCanonical(benchmark::State& state) {
    const ExprPtr f = parse(kMixedExpr);
    for (auto _ : state) {
        benchmark::DoNotOptimize(print_canonical(f));
    }
}
BENCHMARK(BM_PrintCanonical);

}  // namespace

BENCHMARK_MAIN();
