#include <benchmark/benchmark.h>

#include <random>

#include <nott/equivalence.hpp>
#include <nott/sampling.hpp>

using namespace nott;

namespace {

void BM_series_mul(benchmark::State& state) {
    sampling::Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FpSeries a = sampling::series(rng, 3, n);
    const FpSeries b = sampling::series(rng, 3, n);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_series_mul)->Arg(16)->Arg(64)->Arg(256);

void BM_compose(benchmark::State& state) {
    sampling::Rng rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FpSeries f = sampling::series(rng, 3, n);
    const FpSeries g = sampling::inner(rng, 3, n);
    for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_compose)->Arg(16)->Arg(32)->Arg(64);

void BM_group_inverse(benchmark::State& state) {
    sampling::Rng rng(3);
    const auto u = sampling::element(rng, 3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(inverse(u));
}
BENCHMARK(BM_group_inverse)->Arg(16)->Arg(32);

void BM_decompose(benchmark::State& state) {
    sampling::Rng rng(4);
    const auto bound = static_cast<u32>(state.range(0));
    const FpSeries z = sampling::unit(rng, 3, bound + 1);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(z, bound));
}
BENCHMARK(BM_decompose)->Arg(8)->Arg(16)->Arg(32);

void BM_act_direct(benchmark::State& state) {
    sampling::Rng rng(5);
    const u32 m = static_cast<u32>(state.range(0));
    const Character chi = sampling::character(rng, 3, 2, m);
    const auto u = sampling::element(rng, 3, m + 2);
    for (auto _ : state) benchmark::DoNotOptimize(act(u, chi));
}
BENCHMARK(BM_act_direct)->Arg(8)->Arg(11);

void BM_act_table(benchmark::State& state) {
    sampling::Rng rng(6);
    const u32 m = static_cast<u32>(state.range(0));
    const Character chi = sampling::character(rng, 3, 2, m);
    const auto u = sampling::element(rng, 3, m + 2);
    const ActionTable table(u, m);
    const auto prof = profile(chi);
    std::vector<u32> buf;
    for (auto _ : state) {
        table.apply_into(prof, buf);
        benchmark::DoNotOptimize(buf);
    }
}
BENCHMARK(BM_act_table)->Arg(8)->Arg(11);

void BM_weak_orbits(benchmark::State& state) {
    const u32 m = static_cast<u32>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weak_orbits_bruteforce(3, m));
}
BENCHMARK(BM_weak_orbits)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_strict_classes(benchmark::State& state) {
    const u32 m = static_cast<u32>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(strict_classes_bruteforce(3, m));
}
BENCHMARK(BM_strict_classes)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
