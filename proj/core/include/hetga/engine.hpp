#pragma once

/// Generational GA over permutation genomes with a pluggable crossover gate.
///
/// The gate is where the two policies differ. Each generation runs the same
/// three steps for either policy: evaluate everyone, take the worst fitness
/// tau, then decide per parent whether its crossover happens. Homogeneous
/// gating uses one fixed probability; heterogeneous gating opens the gate
/// with probability fitness/tau, so the best individuals change slowly while
/// the worst are recombined every generation.

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hetga/genome.hpp"
#include "hetga/metrics.hpp"
#include "hetga/rng.hpp"

namespace hetga {

/// Permutation genome plus its cached objective value (lower is better).
struct Individual {
    Genome genome;
    double fitness = 0.0;

    friend bool operator==(const Individual&, const Individual&) = default;
};

using Population = std::vector<Individual>;

/// Crossover gate: fixed probability (classical baseline) or scaled by the
/// parent's fitness relative to the population's worst.
class GatingPolicy {
public:
    static GatingPolicy homogeneous(double crossover_prob) {
        if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
            throw std::invalid_argument("homogeneous crossover probability must lie in [0, 1]");
        }
        return GatingPolicy(false, crossover_prob);
    }

    static GatingPolicy heterogeneous() noexcept { return GatingPolicy(true, 0.0); }

    bool is_heterogeneous() const noexcept { return heterogeneous_; }

    /// Fixed gate probability; meaningful for the homogeneous variant only.
    double crossover_prob() const noexcept { return crossover_prob_; }

    const char* name() const noexcept { return heterogeneous_ ? "heterogeneous" : "homogeneous"; }

private:
    GatingPolicy(bool heterogeneous, double crossover_prob) noexcept
        : heterogeneous_(heterogeneous), crossover_prob_(crossover_prob) {}

    bool heterogeneous_;
    double crossover_prob_;
};

struct GAConfig {
    std::size_t population_size = 300;
    std::size_t generations = 500;
    double crossover_prob = 0.9; ///< consumed by GatingPolicy::homogeneous
    double mutation_prob = 0.1;
    std::uint64_t seed = 1;
    std::size_t elitism = 1; ///< best individuals copied unchanged each generation

    void validate() const; ///< throws std::invalid_argument naming the offending field
};

/// Outcome of one evolve() run. Two runs with the same config, policy and
/// problem compare equal except for counters.wall_ms.
struct RunReport {
    bool solved = false;
    std::vector<double> best_fitness_per_generation; ///< entry 0 is the initial population
    Individual final_best;
    Counters counters;
    std::uint64_t seed = 0;
    std::size_t generations_used = 0;
};

/// tau: the largest (worst) fitness in the population.
double worst_fitness(const Population& pop);

/// One gate decision given an externally drawn uniform u in [0, 1).
///
/// Homogeneous: open iff u < crossover_prob. Heterogeneous: open iff
/// (1 - fitness/tau) <= u, i.e. with probability fitness/tau; when tau == 0
/// the whole population is optimal and the gate stays closed. fitness > tau
/// signals a stale fitness cache and throws std::invalid_argument.
bool gate_crossover(double fitness, double tau, const GatingPolicy& policy, double u);

/// Order crossover: the child keeps a uniformly random contiguous segment of
/// `a` and the remaining values in `b`'s relative order. One child per call;
/// the argument order matters.
Genome order_crossover(const Genome& a, const Genome& b, SplitMix64& rng);

/// With probability mutation_prob, swaps two distinct positions; otherwise
/// returns g unchanged. Always permutation-preserving.
Genome swap_mutation(const Genome& g, double mutation_prob, SplitMix64& rng);

/// Indices of the k best individuals, ascending by fitness, ties broken by
/// position.
std::vector<std::size_t> best_indices(const Population& pop, std::size_t k);

/// Anything the engine can optimize: an objective over genomes of a fixed
/// length plus a random-genome initializer.
template <typename P>
concept Problem = requires(const P& p, const Genome& g, SplitMix64& rng) {
    { p.size() } -> std::convertible_to<std::size_t>;
    { p.evaluate(g) } -> std::convertible_to<double>;
    { p.random_genome(rng) } -> std::same_as<Genome>;
};

namespace detail {

/// Runs fn(lo, hi, chunk) over disjoint chunks of [begin, end), inline when
/// threads <= 1. Chunk boundaries depend only on (begin, end, threads), so
/// writes keyed by index land identically however the chunks are scheduled.
template <typename Fn>
void parallel_chunks(std::size_t begin, std::size_t end, unsigned threads, Fn&& fn) {
    const std::size_t count = end - begin;
    if (count == 0) return;
    if (threads <= 1 || count < 2) {
        fn(begin, end, 0u);
        return;
    }
    const unsigned chunks = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
        const std::size_t lo = begin + count * c / chunks;
        const std::size_t hi = begin + count * (c + 1) / chunks;
        pool.emplace_back([&fn, &errors, lo, hi, c] {
            try {
                fn(lo, hi, c);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace detail

/// One generation: evaluate-all / find tau / gate, as three ordered steps.
///
/// The elitism-many best individuals are copied unchanged. The remaining
/// slots are filled by shuffling the current population and walking
/// consecutive pairs (v_a, v_b); each pair's two gates draw independent
/// uniforms, and a closed gate leaves the corresponding parent's copy in
/// place of a child. Every non-elite child is then mutated and evaluated.
/// All randomness comes from per-slot streams keyed by (seed, generation,
/// slot), so the result is independent of `threads`.
template <typename Objective>
Population step_generation(const Population& pop, const GatingPolicy& policy, const GAConfig& cfg,
                           Objective&& objective, const RngStreams& streams,
                           std::uint64_t generation, Counters& counters, unsigned threads = 1) {
    const std::size_t pop_size = pop.size();
    if (pop_size < 2) throw std::invalid_argument("population must hold at least two individuals");
    const std::size_t elite = cfg.elitism;
    if (elite >= pop_size) throw std::invalid_argument("elitism must be smaller than the population");

    const double tau = worst_fitness(pop);

    Population next(pop_size);
    const auto elite_idx = best_indices(pop, elite);
    for (std::size_t e = 0; e < elite; ++e) next[e] = pop[elite_idx[e]];

    // Uniform random pairing: one shuffle per generation, drawn from the
    // reserved slot index pop_size.
    std::vector<std::uint32_t> order(pop_size);
    std::iota(order.begin(), order.end(), 0u);
    SplitMix64 shuffle_rng = streams.slot(generation, pop_size);
    shuffle(order, shuffle_rng);

    const unsigned parts = std::max(1u, threads);
    std::vector<Counters> local(parts);
    detail::parallel_chunks(elite, pop_size, threads, [&](std::size_t lo, std::size_t hi, unsigned c) {
        for (std::size_t slot = lo; slot < hi; ++slot) {
            const std::size_t k = slot - elite;
            const std::size_t pair = 2 * (k / 2);
            // Odd tail: the last shuffled individual pairs with the first.
            const std::size_t self = (k % 2 == 0) ? pair : (pair + 1) % pop_size;
            const std::size_t mate = (k % 2 == 0) ? (pair + 1) % pop_size : pair;
            const Individual& parent = pop[order[self]];
            const Individual& partner = pop[order[mate]];

            SplitMix64 rng = streams.slot(generation, slot);
            const double u = uniform01(rng);

            Genome child;
            if (gate_crossover(parent.fitness, tau, policy, u)) {
                child = order_crossover(parent.genome, partner.genome, rng);
                local[c].record_crossover();
            } else {
                child = parent.genome;
            }
            child = swap_mutation(child, cfg.mutation_prob, rng);
            const double fitness = objective(child);
            local[c].record_eval();
            next[slot] = Individual{std::move(child), fitness};
        }
    });
    for (const auto& part : local) counters += part;
    counters.record_generation();
    return next;
}

/// Full run: random initial population from the seed, then step_generation
/// until the generation budget is spent or the best fitness reaches
/// `target`. The trajectory records the best fitness after initialization
/// and after every generation.
template <Problem P>
RunReport evolve(const GAConfig& cfg, const GatingPolicy& policy, const P& problem,
                 std::optional<double> target = std::nullopt, unsigned threads = 1) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    RunReport report;
    report.seed = cfg.seed;
    const RngStreams streams{cfg.seed};
    const std::size_t pop_size = cfg.population_size;

    Population pop(pop_size);
    {
        const unsigned parts = std::max(1u, threads);
        std::vector<Counters> local(parts);
        detail::parallel_chunks(0, pop_size, threads, [&](std::size_t lo, std::size_t hi, unsigned c) {
            for (std::size_t i = lo; i < hi; ++i) {
                SplitMix64 rng = streams.slot(0, i);
                Genome g = problem.random_genome(rng);
                const double fitness = problem.evaluate(g);
                local[c].record_eval();
                pop[i] = Individual{std::move(g), fitness};
            }
        });
        for (const auto& part : local) report.counters += part;
    }

    std::size_t best = best_indices(pop, 1).front();
    report.best_fitness_per_generation.push_back(pop[best].fitness);

    const auto objective = [&problem](const Genome& g) { return problem.evaluate(g); };
    std::size_t used = 0;
    for (std::uint64_t gen = 1; gen <= cfg.generations; ++gen) {
        if (target && pop[best].fitness <= *target) break;
        pop = step_generation(pop, policy, cfg, objective, streams, gen, report.counters, threads);
        ++used;
        best = best_indices(pop, 1).front();
        report.best_fitness_per_generation.push_back(pop[best].fitness);
    }

    report.generations_used = used;
    report.final_best = pop[best];
    report.solved = target.has_value() && pop[best].fitness <= *target;
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    report.counters = report.counters.with_wall_ms(elapsed.count());
    return report;
}

} // namespace hetga
