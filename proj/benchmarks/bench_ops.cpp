// Microbenchmarks for the hot operators; run manually, not part of ctest.

#include <benchmark/benchmark.h>

#include "hetga/engine.hpp"
#include "hetga/nqueens.hpp"
#include "hetga/tsp.hpp"

namespace {

hetga::Genome make_perm(std::size_t n, std::uint64_t seed) {
    hetga::SplitMix64 rng(seed);
    return hetga::random_permutation(n, rng);
}

void BM_conflicts(benchmark::State& state) {
    const auto g = make_perm(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetga::nqueens::conflicts(g));
    }
}
BENCHMARK(BM_conflicts)->Arg(20)->Arg(100);

void BM_tour_length(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto points = hetga::tsp::random_instance(n, 11);
    const auto tour = make_perm(n, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetga::tsp::tour_length(tour, points));
    }
}
BENCHMARK(BM_tour_length)->Arg(100)->Arg(1000);

void BM_order_crossover(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto a = make_perm(n, 17);
    const auto b = make_perm(n, 19);
    hetga::SplitMix64 rng(23);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetga::order_crossover(a, b, rng));
    }
}
BENCHMARK(BM_order_crossover)->Arg(20)->Arg(200);

void BM_step_generation(benchmark::State& state) {
    const hetga::nqueens::NQueensProblem problem{20};
    hetga::GAConfig cfg;
    cfg.population_size = 300;
    cfg.seed = 29;
    const bool het = state.range(0) != 0;
    const auto policy =
        het ? hetga::GatingPolicy::heterogeneous() : hetga::GatingPolicy::homogeneous(0.9);
    const hetga::RngStreams streams{cfg.seed};

    hetga::Population pop(cfg.population_size);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        auto rng = streams.slot(0, i);
        auto g = problem.random_genome(rng);
        const double f = problem.evaluate(g);
        pop[i] = hetga::Individual{std::move(g), f};
    }

    const auto objective = [&](const hetga::Genome& g) { return problem.evaluate(g); };
    hetga::Counters counters;
    std::uint64_t generation = 1;
    for (auto _ : state) {
        pop = hetga::step_generation(pop, policy, cfg, objective, streams, generation++, counters);
    }
}
BENCHMARK(BM_step_generation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_enumerate_solutions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hetga::nqueens::enumerate_solutions(n));
    }
}
BENCHMARK(BM_enumerate_solutions)->Arg(8)->Arg(10);

} // namespace

BENCHMARK_MAIN();
