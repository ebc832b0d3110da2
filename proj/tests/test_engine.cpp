#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "hetga/engine.hpp"
#include "hetga/nqueens.hpp"

using namespace hetga;

namespace {

Genome perm(std::initializer_list<int> values) { return Genome(values); }

Population make_population(std::initializer_list<double> fitnesses) {
    Population pop;
    int row = 0;
    for (const double f : fitnesses) {
        pop.push_back(Individual{perm({0}), f});
        (void)row;
    }
    return pop;
}

// Sorted copy, for multiset comparisons of genomes.
std::vector<Genome> sorted_genomes(const Population& pop) {
    std::vector<Genome> gs;
    gs.reserve(pop.size());
    for (const auto& ind : pop) gs.push_back(ind.genome);
    std::sort(gs.begin(), gs.end());
    return gs;
}

} // namespace

TEST_CASE("worst_fitness returns the maximum") {
    CHECK(worst_fitness(make_population({0, 3, 7})) == 7.0);
    CHECK(worst_fitness(make_population({5})) == 5.0);
    CHECK(worst_fitness(make_population({0, 0, 0})) == 0.0);
    CHECK_THROWS_AS(worst_fitness(Population{}), std::invalid_argument);
}

TEST_CASE("heterogeneous gate endpoints") {
    const auto het = GatingPolicy::heterogeneous();
    // worst individual: condition 0 <= u always holds
    CHECK(gate_crossover(10.0, 10.0, het, 0.0));
    CHECK(gate_crossover(10.0, 10.0, het, 0.999999));
    // best individual: condition 1 <= u never holds for u in [0, 1)
    for (double u = 0.0; u < 1.0; u += 0.0625) {
        CHECK_FALSE(gate_crossover(0.0, 10.0, het, u));
    }
    // fully optimal population: gate stays closed
    CHECK_FALSE(gate_crossover(0.0, 0.0, het, 0.0));
    CHECK_THROWS_AS(gate_crossover(11.0, 10.0, het, 0.5), std::invalid_argument);
}

TEST_CASE("homogeneous gate is a fixed-probability coin") {
    CHECK(gate_crossover(3.0, 9.0, GatingPolicy::homogeneous(0.9), 0.899));
    CHECK_FALSE(gate_crossover(3.0, 9.0, GatingPolicy::homogeneous(0.9), 0.9));
    for (double u = 0.0; u < 1.0; u += 0.125) {
        CHECK_FALSE(gate_crossover(1.0, 2.0, GatingPolicy::homogeneous(0.0), u));
        CHECK(gate_crossover(1.0, 2.0, GatingPolicy::homogeneous(1.0), u));
    }
    CHECK_THROWS_AS(GatingPolicy::homogeneous(1.5), std::invalid_argument);
}

TEST_CASE("heterogeneous gate frequency converges to fitness/tau") {
    const auto het = GatingPolicy::heterogeneous();
    SplitMix64 rng(20240817);
    const int draws = 100000;
    int open = 0;
    for (int i = 0; i < draws; ++i) {
        if (gate_crossover(2.5, 10.0, het, uniform01(rng))) ++open;
    }
    CHECK(std::abs(static_cast<double>(open) / draws - 0.25) <= 0.01);
}

TEST_CASE("population with uniform fitness gates like homogeneous p_c = 1") {
    const auto het = GatingPolicy::heterogeneous();
    const auto always = GatingPolicy::homogeneous(1.0);
    for (double u = 0.0; u < 1.0; u += 0.001) {
        CHECK(gate_crossover(7.5, 7.5, het, u) == gate_crossover(7.5, 7.5, always, u));
    }
}

TEST_CASE("order crossover of identical parents reproduces the parent") {
    SplitMix64 seed_rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Genome a = random_permutation(1 + trial % 17, seed_rng);
        SplitMix64 rng(seed_rng());
        CHECK(order_crossover(a, a, rng) == a);
    }
}

TEST_CASE("order crossover stays within the n=2 permutations") {
    const Genome fwd = perm({0, 1});
    const Genome rev = perm({1, 0});
    for (std::uint64_t s = 0; s < 200; ++s) {
        SplitMix64 rng(s);
        const Genome child = order_crossover(fwd, rev, rng);
        CHECK((child == fwd || child == rev));
        SplitMix64 rng2(s);
        const Genome child2 = order_crossover(rev, fwd, rng2);
        CHECK((child2 == fwd || child2 == rev));
    }
}

TEST_CASE("order crossover preserves the permutation invariant") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 10000; ++trial) {
        const Genome a = random_permutation(20, rng);
        const Genome b = random_permutation(20, rng);
        CHECK(is_permutation(order_crossover(a, b, rng)));
    }
    CHECK_THROWS_AS(order_crossover(perm({0, 1}), perm({0, 1, 2}), rng), std::invalid_argument);
}

TEST_CASE("order crossover keeps a segment of a and b's relative order") {
    // deterministic spot check against the operator definition
    const Genome a = perm({0, 1, 2, 3, 4, 5, 6, 7});
    const Genome b = perm({7, 6, 5, 4, 3, 2, 1, 0});
    for (std::uint64_t s = 0; s < 64; ++s) {
        SplitMix64 rng(s);
        const Genome child = order_crossover(a, b, rng);
        REQUIRE(is_permutation(child));
        // values not taken from a's segment must appear in b's order, i.e.
        // descending, across the remaining positions
        std::vector<int> fill;
        for (std::size_t i = 0; i < child.size(); ++i) {
            if (child[i] != a[i]) fill.push_back(child[i]);
        }
        CHECK(std::is_sorted(fill.begin(), fill.end(), std::greater<int>()));
    }
}

TEST_CASE("swap mutation honors its probability") {
    SplitMix64 rng(7);
    const Genome g = random_permutation(12, rng);
    for (int i = 0; i < 100; ++i) CHECK(swap_mutation(g, 0.0, rng) == g);

    const Genome two = perm({1, 0});
    for (std::uint64_t s = 0; s < 50; ++s) {
        SplitMix64 r(s);
        CHECK(swap_mutation(two, 1.0, r) == perm({0, 1}));
    }

    int changed = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
        const Genome before = random_permutation(50, rng);
        const Genome after = swap_mutation(before, 0.1, rng);
        REQUIRE(is_permutation(after));
        if (after != before) ++changed;
    }
    CHECK(std::abs(static_cast<double>(changed) / trials - 0.1) <= 0.01);
}

TEST_CASE("step with a fully optimal population only mutates") {
    GAConfig cfg;
    cfg.population_size = 10;
    cfg.mutation_prob = 0.0;
    cfg.elitism = 0;
    cfg.seed = 3;

    // identical optimal individuals: tau == 0 closes every heterogeneous gate
    SplitMix64 rng(1);
    const Genome solution = perm({2, 4, 7, 3, 0, 6, 1, 5});
    Population pop(10, Individual{solution, 0.0});

    Counters counters;
    const auto objective = [](const Genome& g) {
        return static_cast<double>(nqueens::conflicts(g));
    };
    const Population next = step_generation(pop, GatingPolicy::heterogeneous(), cfg, objective,
                                            RngStreams{cfg.seed}, 1, counters);
    CHECK(counters.crossover_ops == 0);
    CHECK(next == pop);
}

TEST_CASE("step with all operators disabled reorders the population") {
    GAConfig cfg;
    cfg.population_size = 21; // odd on purpose: exercises the wrap pair
    cfg.crossover_prob = 0.0;
    cfg.mutation_prob = 0.0;
    cfg.elitism = 0;
    cfg.seed = 11;

    const nqueens::NQueensProblem problem{9};
    const auto objective = [&](const Genome& g) { return problem.evaluate(g); };
    RngStreams streams{cfg.seed};
    Population pop(cfg.population_size);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        SplitMix64 rng = streams.slot(0, i);
        Genome g = problem.random_genome(rng);
        const double f = problem.evaluate(g);
        pop[i] = Individual{std::move(g), f};
    }

    Counters counters;
    const Population next = step_generation(pop, GatingPolicy::homogeneous(0.0), cfg, objective,
                                            streams, 1, counters, 1);
    CHECK(counters.crossover_ops == 0);
    CHECK(counters.objective_evals == pop.size());
    CHECK(sorted_genomes(next) == sorted_genomes(pop));
}

TEST_CASE("homogeneous crossover count concentrates around slots * p_c") {
    GAConfig cfg;
    cfg.population_size = 300;
    cfg.crossover_prob = 0.9;
    cfg.mutation_prob = 0.1;
    cfg.elitism = 0;
    cfg.seed = 19;

    const nqueens::NQueensProblem problem{10};
    const auto objective = [&](const Genome& g) { return problem.evaluate(g); };
    RngStreams streams{cfg.seed};
    Population pop(cfg.population_size);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        SplitMix64 rng = streams.slot(0, i);
        Genome g = problem.random_genome(rng);
        const double f = problem.evaluate(g);
        pop[i] = Individual{std::move(g), f};
    }

    Counters counters;
    const auto hom = GatingPolicy::homogeneous(0.9);
    const int generations = 100;
    for (int g = 1; g <= generations; ++g) {
        pop = step_generation(pop, hom, cfg, objective, streams, static_cast<std::uint64_t>(g),
                              counters);
    }
    const double per_generation = static_cast<double>(counters.crossover_ops) / generations;
    CHECK(std::abs(per_generation - 270.0) <= 15.0);
    // conservation: every non-elite slot is evaluated exactly once per step
    CHECK(counters.objective_evals == static_cast<std::uint64_t>(generations) * 300);
    CHECK(counters.generations == static_cast<std::uint64_t>(generations));
}

TEST_CASE("permutation closure and counter conservation across generations") {
    GAConfig cfg;
    cfg.population_size = 20;
    cfg.generations = 50;
    cfg.elitism = 2;
    cfg.seed = 77;

    const nqueens::NQueensProblem problem{10};
    const auto objective = [&](const Genome& g) { return problem.evaluate(g); };
    RngStreams streams{cfg.seed};
    Population pop(cfg.population_size);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        SplitMix64 rng = streams.slot(0, i);
        Genome g = problem.random_genome(rng);
        const double f = problem.evaluate(g);
        pop[i] = Individual{std::move(g), f};
    }

    for (const auto policy : {GatingPolicy::heterogeneous(), GatingPolicy::homogeneous(0.9)}) {
        Population current = pop;
        Counters counters;
        for (std::uint64_t g = 1; g <= cfg.generations; ++g) {
            const Counters before = counters;
            current = step_generation(current, policy, cfg, objective, streams, g, counters);
            for (const auto& ind : current) {
                REQUIRE(is_permutation(ind.genome));
                REQUIRE(ind.fitness == problem.evaluate(ind.genome)); // cache coherence
            }
            const std::uint64_t slots = cfg.population_size - cfg.elitism;
            CHECK(counters.objective_evals - before.objective_evals == slots);
            CHECK(counters.crossover_ops - before.crossover_ops <= slots);
        }
    }
}

TEST_CASE("evolve with a zero generation budget reports the initial population") {
    GAConfig cfg;
    cfg.population_size = 40;
    cfg.generations = 0;
    cfg.seed = 123;

    const nqueens::NQueensProblem problem{20};
    const RunReport report = evolve(cfg, GatingPolicy::heterogeneous(), problem, 0.0);
    CHECK(report.generations_used == 0);
    CHECK(report.best_fitness_per_generation.size() == 1);
    CHECK(report.counters.objective_evals == 40);
    CHECK(report.counters.crossover_ops == 0);
    CHECK_FALSE(report.solved);
}

TEST_CASE("evolve is deterministic and thread-count invariant") {
    GAConfig cfg;
    cfg.population_size = 60;
    cfg.generations = 30;
    cfg.seed = 2024;

    const nqueens::NQueensProblem problem{12};
    const auto het = GatingPolicy::heterogeneous();
    const RunReport a = evolve(cfg, het, problem, 0.0);
    const RunReport b = evolve(cfg, het, problem, 0.0);
    const RunReport c = evolve(cfg, het, problem, 0.0, 4);

    for (const RunReport* other : {&b, &c}) {
        CHECK(a.solved == other->solved);
        CHECK(a.generations_used == other->generations_used);
        CHECK(a.best_fitness_per_generation == other->best_fitness_per_generation);
        CHECK(a.final_best == other->final_best);
        CHECK(a.counters.crossover_ops == other->counters.crossover_ops);
        CHECK(a.counters.objective_evals == other->counters.objective_evals);
        CHECK(a.counters.generations == other->counters.generations);
    }
}

TEST_CASE("evolve with elitism keeps the best trajectory non-increasing") {
    GAConfig cfg;
    cfg.population_size = 80;
    cfg.generations = 120;
    cfg.elitism = 1;
    cfg.seed = 5;

    const nqueens::NQueensProblem problem{12};
    for (const auto policy : {GatingPolicy::heterogeneous(), GatingPolicy::homogeneous(0.9)}) {
        const RunReport report = evolve(cfg, policy, problem, 0.0);
        const auto& best = report.best_fitness_per_generation;
        CHECK(std::is_sorted(best.begin(), best.end(), std::greater<double>()));
        CHECK(report.best_fitness_per_generation.size() == report.generations_used + 1);
        if (report.solved) {
            CHECK(nqueens::is_solution(report.final_best.genome));
            CHECK(report.final_best.fitness == 0.0);
        }
    }
}

TEST_CASE("evolve stops as soon as the target is reached") {
    GAConfig cfg;
    cfg.population_size = 200;
    cfg.generations = 500;
    cfg.seed = 8;

    const nqueens::NQueensProblem problem{8};
    const RunReport report = evolve(cfg, GatingPolicy::heterogeneous(), problem, 0.0);
    REQUIRE(report.solved);
    CHECK(report.generations_used < cfg.generations);
    CHECK(nqueens::is_solution(report.final_best.genome));
    // trajectory ends at the first generation whose best hit the target
    CHECK(report.best_fitness_per_generation.back() == 0.0);
}

TEST_CASE("config validation names the offending field") {
    GAConfig cfg;
    cfg.population_size = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.population_size = 10;
    cfg.elitism = 10;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.elitism = 0;
    cfg.mutation_prob = -0.1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
