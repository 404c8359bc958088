#include "hopfgate/compounds.hpp"
#include "hopfgate/dsr2.hpp"
#include "hopfgate/exact_linalg.hpp"
#include "hopfgate/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace hopfgate;

namespace {

RationalMatrix random_matrix(int rows, int cols, uint64_t seed, double density) {
    SignPattern p(rows, cols);
    uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 1;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if ((double)(next() >> 11) * 0x1p-53 >= density) continue;
            p.set(i, j, (next() & 1) ? 1 : -1);
        }
    SampleSpec spec = SampleSpec::of_class(p, ClassMode::Q, seed);
    return sample_member(spec, 0);
}

void bm_build_factors(benchmark::State& state) {
    int n = (int)state.range(0);
    RationalMatrix a = random_matrix(n, n, 7, 0.7);
    RationalMatrix b = random_matrix(n, n, 11, 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(build_factors(a, b));
}
BENCHMARK(bm_build_factors)->Arg(4)->Arg(6)->Arg(8);

void bm_is_p0(benchmark::State& state) {
    int n = (int)state.range(0);
    RationalMatrix a = random_matrix(n, n, 13, 0.8);
    RationalMatrix m = a * a.transpose();
    for (auto _ : state) benchmark::DoNotOptimize(is_p0(m));
}
BENCHMARK(bm_is_p0)->Arg(5)->Arg(7)->Arg(9);

void bm_enumerate_cycles(benchmark::State& state) {
    int n = (int)state.range(0);
    RationalMatrix a = random_matrix(n, n - 1, 17, 0.5);
    DsrGraph g = build_dsr(a, a.transpose());
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(g));
}
BENCHMARK(bm_enumerate_cycles)->Arg(4)->Arg(5)->Arg(6);

void bm_dsr2_classify(benchmark::State& state) {
    int n = (int)state.range(0);
    RationalMatrix a = random_matrix(n, 3, 19, 0.6);
    Dsr2Graph g2 = build_dsr2(a, a.transpose());
    for (auto _ : state) benchmark::DoNotOptimize(classify_graph(g2.graph));
}
BENCHMARK(bm_dsr2_classify)->Arg(3)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
