#pragma once

/// N-queens: conflict objective, exact solution counting for small boards,
/// and board rendering. Boards are permutation-encoded, one queen per
/// column, so row clashes are impossible by construction but the objective
/// still tests them and therefore accepts arbitrary integer vectors.

#include <cstdint>
#include <string>

#include "hetga/genome.hpp"
#include "hetga/rng.hpp"

namespace hetga::nqueens {

/// Number of attacking ordered pairs (same row or same diagonal), each pair
/// counted once. Zero iff the board is a valid solution.
int conflicts(const Genome& g);

/// True iff no queen attacks another.
bool is_solution(const Genome& g);

/// Exact number of distinct n-queens solutions by backtracking. Capped at
/// n <= 10 to stay within seconds; outside [1, 10] throws
/// std::invalid_argument.
long long enumerate_solutions(int n);

inline constexpr int kEnumerationCap = 10;

/// Per-column flag: true when that queen is attacked by at least one other.
std::vector<bool> attacked(const Genome& g);

/// Text board, one rank per line: '*' safe queen, 'O' attacked queen,
/// '.' empty square.
std::string render_board_text(const Genome& g);

/// Standalone SVG board; safe queens green, attacked queens blue.
std::string render_board_svg(const Genome& g);

/// Engine adapter: minimize conflicts over n-length permutations.
struct NQueensProblem {
    std::size_t n = 8;

    std::size_t size() const noexcept { return n; }
    double evaluate(const Genome& g) const { return static_cast<double>(conflicts(g)); }
    Genome random_genome(SplitMix64& rng) const { return random_permutation(n, rng); }
};

} // namespace hetga::nqueens
