// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links
//
// Serial vs OpenMP throughput of the two hot kernels: the element-pair phase-spread enumeration
// and the Monte-Carlo boundary sampler. The parallel paths are bit-identical to the serial
// references (order-independent reductions and per-sample counter streams), so these benchmarks
// measure speed only.

#include <benchmark/benchmark.h>

#include "nearfield/oracle.hpp"
#include "nearfield/stats.hpp"

using namespace nearfield;

namespace {

// Planar pair at 300 GHz and half-wavelength spacing; hull mode trims it to the aperture
// boundary, full mode enumerates every element.
OracleConfig planar_config(double d1, double d2, EnumerationMode mode) {
    const double lambda = speed_of_light / 300.0e9;
    LinkConfig link;
    link.family = Family::p2p_off_dual;
    link.tx = ArraySpec::with_aperture(ArrayKind::planar, d1, 0.5 * lambda);
    link.rx = ArraySpec::with_aperture(ArrayKind::planar, d2, 0.5 * lambda);
    link.orientation = {0.5, 1.0};
    link.link.alpha = 0.5;
    link.link.wavelength = lambda;
    link.link.distance = std::max(link.min_separation(), lambda);
    return {link, mode, {}};
}

MonteCarloSpec sampler_spec(std::size_t samples) {
    MonteCarloSpec spec;
    spec.family = Family::p2p_off_dual;
    spec.params = {0.1, 0.05, 1e-3, pi / 8.0};
    const AngularDistribution tvm{0.0, 8.0, -pi / 2.0, pi / 2.0};
    spec.angles.emplace("theta_prime", AngleInput::von_mises(tvm));
    spec.angles.emplace("phi", AngleInput::von_mises(tvm));
    spec.angles.emplace("alpha", AngleInput::von_mises(tvm));
    spec.samples = samples;
    spec.seed = 99;
    return spec;
}

void spread_serial(benchmark::State &state) {
    const OracleConfig config =
        planar_config(0.1, 0.05, state.range(0) != 0 ? EnumerationMode::hull : EnumerationMode::full);
    for (auto _ : state)
        benchmark::DoNotOptimize(phase_spread_serial(config, 40.0));
}

void spread_parallel(benchmark::State &state) {
    const OracleConfig config =
        planar_config(0.1, 0.05, state.range(0) != 0 ? EnumerationMode::hull : EnumerationMode::full);
    for (auto _ : state)
        benchmark::DoNotOptimize(phase_spread(config, 40.0));
}

void boundary_search(benchmark::State &state) {
    const OracleConfig config = planar_config(0.1, 0.05, EnumerationMode::hull);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_rf(config).rf);
}

void sampler_serial(benchmark::State &state) {
    const MonteCarloSpec spec = sampler_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_samples_serial(spec).back());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void sampler_parallel(benchmark::State &state) {
    const MonteCarloSpec spec = sampler_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_samples(spec).back());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

// range argument: 1 = hull enumeration, 0 = full enumeration
BENCHMARK(spread_serial)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(spread_parallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(boundary_search)->Unit(benchmark::kMillisecond);
BENCHMARK(sampler_serial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(sampler_parallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
