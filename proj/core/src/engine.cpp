#include "hetga/engine.hpp"

#include <cassert>
#include <cmath>

namespace hetga {

void GAConfig::validate() const {
    if (population_size < 2) throw std::invalid_argument("population_size must be at least 2");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
        throw std::invalid_argument("crossover_prob must lie in [0, 1]");
    }
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
        throw std::invalid_argument("mutation_prob must lie in [0, 1]");
    }
    if (elitism >= population_size) {
        throw std::invalid_argument("elitism must be smaller than population_size");
    }
}

double worst_fitness(const Population& pop) {
    if (pop.empty()) throw std::invalid_argument("worst_fitness: empty population");
    double worst = pop.front().fitness;
    for (const Individual& ind : pop) worst = std::max(worst, ind.fitness);
    return worst;
}

bool gate_crossover(double fitness, double tau, const GatingPolicy& policy, double u) {
    if (fitness > tau) {
        throw std::invalid_argument("gate_crossover: fitness exceeds tau (stale fitness cache?)");
    }
    assert(u >= 0.0 && u < 1.0);
    if (!policy.is_heterogeneous()) return u < policy.crossover_prob();
    if (tau == 0.0) return false; // whole population is already optimal
    return (1.0 - fitness / tau) <= u;
}

Genome order_crossover(const Genome& a, const Genome& b, SplitMix64& rng) {
    if (a.size() != b.size()) throw std::invalid_argument("order_crossover: parent lengths differ");
    const std::size_t n = a.size();
    assert(is_permutation(a) && is_permutation(b));

    const std::size_t i = uniform_below(rng, n);
    const std::size_t j = uniform_below(rng, n);
    const auto [lo, hi] = std::minmax(i, j); // inclusive segment kept from a

    Genome child(n);
    std::vector<bool> kept(n, false);
    for (std::size_t k = lo; k <= hi; ++k) {
        child[k] = a[k];
        kept[static_cast<std::size_t>(a[k])] = true;
    }
    std::size_t out = (lo == 0) ? hi + 1 : 0;
    for (const int v : b) {
        if (kept[static_cast<std::size_t>(v)]) continue;
        child[out++] = v;
        if (out == lo) out = hi + 1;
    }
    return child;
}

Genome swap_mutation(const Genome& g, double mutation_prob, SplitMix64& rng) {
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
        throw std::invalid_argument("swap_mutation: mutation_prob must lie in [0, 1]");
    }
    Genome out = g;
    if (out.size() < 2) return out;
    if (uniform01(rng) >= mutation_prob) return out;
    const std::size_t i = uniform_below(rng, out.size());
    std::size_t j = uniform_below(rng, out.size() - 1);
    if (j >= i) ++j;
    std::swap(out[i], out[j]);
    return out;
}

std::vector<std::size_t> best_indices(const Population& pop, std::size_t k) {
    std::vector<std::size_t> idx(pop.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    k = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&pop](std::size_t lhs, std::size_t rhs) {
                          if (pop[lhs].fitness != pop[rhs].fitness) {
                              return pop[lhs].fitness < pop[rhs].fitness;
                          }
                          return lhs < rhs;
                      });
    idx.resize(k);
    return idx;
}

} // namespace hetga
