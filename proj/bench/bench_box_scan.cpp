// Serial reference scan vs the OpenMP kernel on the same templates.

#include <benchmark/benchmark.h>

#include "pairdepth/homology.hpp"
#include "pairdepth/syntax.hpp"

namespace {

using namespace pairdepth;

struct Instance {
    ComplexTemplate tpl;
    Subquotient module;
};

Instance make(int which) {
    const RingContext ring = parse_ring("Q[x,y,z,w]");
    switch (which) {
        case 0:
            return {ComplexTemplate::koszul(parse_ideal(ring, "(x,y,z,w)")),
                    parse_module(ring, "(1)/(x^2*y, y*z^2, x*z*w, w^3)")};
        case 1:
            return {ComplexTemplate::taylor(parse_ideal(ring, "(x^2, x*y, y*z, z^2*w, w^2)")),
                    parse_module(ring, "(x, w)/(x^2*y, x*w^2, y*w^3)")};
        default:
            return {ComplexTemplate::koszul(parse_ideal(ring, "(x*y, z, w^2)")),
                    parse_module(ring, "(1)/(x^3, y^3, z^3*w)")};
    }
}

void BM_Serial(benchmark::State& state) {
    const Instance in = make(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nonvanishing_profile_serial(in.tpl, in.module, Field::rationals()));
    }
}

void BM_Parallel(benchmark::State& state) {
    const Instance in = make(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nonvanishing_profile(in.tpl, in.module, Field::rationals()));
    }
}

BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
