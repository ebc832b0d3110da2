#include "hetga/nqueens.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hetga::nqueens {

int conflicts(const Genome& g) {
    int clashes = 0;
    for (std::size_t q = 1; q < g.size(); ++q) {
        for (std::size_t i = 0; i < q; ++i) {
            // Same row (unreachable for permutations, but the objective is
            // defined over arbitrary vectors) or same diagonal.
            if (g[i] == g[q] || std::abs(g[q] - g[i]) == static_cast<int>(q - i)) ++clashes;
        }
    }
    return clashes;
}

bool is_solution(const Genome& g) { return conflicts(g) == 0; }

long long enumerate_solutions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_solutions: n must be at least 1");
    if (n > kEnumerationCap) {
        throw std::invalid_argument("enumerate_solutions: n > 10 is not supported; the search space "
                                    "grows factorially");
    }
    const std::uint32_t full = (1u << n) - 1;
    long long count = 0;
    // Place one queen per row; masks track attacked columns and diagonals.
    auto place = [&](auto&& self, std::uint32_t cols, std::uint32_t left, std::uint32_t right) -> void {
        if (cols == full) {
            ++count;
            return;
        }
        std::uint32_t open = full & ~(cols | left | right);
        while (open != 0) {
            const std::uint32_t bit = open & (~open + 1);
            open ^= bit;
            self(self, cols | bit, ((left | bit) << 1) & full, (right | bit) >> 1);
        }
    };
    place(place, 0, 0, 0);
    return count;
}

std::vector<bool> attacked(const Genome& g) {
    std::vector<bool> hit(g.size(), false);
    for (std::size_t q = 1; q < g.size(); ++q) {
        for (std::size_t i = 0; i < q; ++i) {
            if (g[i] == g[q] || std::abs(g[q] - g[i]) == static_cast<int>(q - i)) {
                hit[i] = true;
                hit[q] = true;
            }
        }
    }
    return hit;
}

namespace {

void require_renderable(const Genome& g, const char* where) {
    if (g.empty()) throw std::invalid_argument(std::string(where) + ": empty genome");
    for (const int v : g) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
            throw std::invalid_argument(std::string(where) + ": row index out of range");
        }
    }
}

} // namespace

std::string render_board_text(const Genome& g) {
    require_renderable(g, "render_board_text");
    const int n = static_cast<int>(g.size());
    const std::vector<bool> hit = attacked(g);
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (2 * static_cast<std::size_t>(n)));
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            if (g[static_cast<std::size_t>(col)] == row) {
                out += hit[static_cast<std::size_t>(col)] ? 'O' : '*';
            } else {
                out += '.';
            }
            if (col + 1 < n) out += ' ';
        }
        out += '\n';
    }
    return out;
}

std::string render_board_svg(const Genome& g) {
    require_renderable(g, "render_board_svg");
    const int n = static_cast<int>(g.size());
    const int cell = 40;
    const int side = n * cell;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << side << ' ' << side
        << "\" width=\"" << side << "\" height=\"" << side << "\">\n";
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            const char* fill = ((row + col) % 2 == 0) ? "#f0d9b5" : "#b58863";
            svg << "  <rect x=\"" << col * cell << "\" y=\"" << row * cell << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    const std::vector<bool> hit = attacked(g);
    for (int col = 0; col < n; ++col) {
        const int row = g[static_cast<std::size_t>(col)];
        const char* fill = hit[static_cast<std::size_t>(col)] ? "#1565c0" : "#2e7d32";
        svg << "  <circle cx=\"" << col * cell + cell / 2 << "\" cy=\"" << row * cell + cell / 2
            << "\" r=\"" << cell * 7 / 20 << "\" fill=\"" << fill << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace hetga::nqueens
