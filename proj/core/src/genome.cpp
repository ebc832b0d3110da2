#include "hetga/genome.hpp"

#include <numeric>
#include <stdexcept>

namespace hetga {

bool is_permutation(const Genome& g) {
    if (g.empty()) return false;
    std::vector<bool> seen(g.size(), false);
    for (const int v : g) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.size()) return false;
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Genome random_permutation(std::size_t n, SplitMix64& rng) {
    if (n == 0) throw std::invalid_argument("random_permutation: n must be at least 1");
    Genome g(n);
    std::iota(g.begin(), g.end(), 0);
    shuffle(g, rng);
    return g;
}

} // namespace hetga
