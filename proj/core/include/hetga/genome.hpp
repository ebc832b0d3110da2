#pragma once

#include <vector>

#include "hetga/rng.hpp"

namespace hetga {

/// A permutation of 0..n-1. Position i holds the board row of the queen in
/// column i (N-queens) or the index of the i-th city visited (TSP).
using Genome = std::vector<int>;

/// True iff g contains every value in [0, g.size()) exactly once and is
/// non-empty.
bool is_permutation(const Genome& g);

/// Uniformly random permutation of 0..n-1. Throws std::invalid_argument for
/// n == 0.
Genome random_permutation(std::size_t n, SplitMix64& rng);

} // namespace hetga
