#pragma once

/// Euclidean TSP: point-set ingestion, tour length, a brute-force oracle for
/// tiny instances, seeded random instances, and SVG tour rendering. Tours
/// are closed: the last city connects back to the first.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hetga/genome.hpp"
#include "hetga/rng.hpp"

namespace hetga::tsp {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Indexed by genome values; order defines city indices.
using PointSet = std::vector<Point>;

/// Euclidean distance.
double distance(const Point& p, const Point& q);

/// Closed tour length: consecutive legs plus the edge back to the start.
/// Throws std::invalid_argument when tour and point set sizes differ.
double tour_length(const Genome& tour, const PointSet& points);

/// Reads "x y" pairs, one per line; lines starting with '#' and blank lines
/// are skipped. Malformed lines raise std::runtime_error naming the line;
/// fewer than 2 points is an error.
PointSet load_points(const std::string& path);

/// Same parser over an already-open stream; `source` names the origin in
/// error messages.
PointSet parse_points(std::istream& in, const std::string& source);

/// Writes points in load_points format with shortest round-trip precision.
void save_points(const PointSet& points, const std::string& path);

struct Box {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 1.0;
    double max_y = 1.0;
};

/// n uniform points in the box, deterministic per seed. n >= 2.
PointSet random_instance(std::size_t n, std::uint64_t seed, const Box& box = {});

struct BruteForceResult {
    Genome tour;
    double length = 0.0;
};

inline constexpr std::size_t kBruteForceCap = 10;

/// Exact optimum by enumerating tours with city 0 fixed and reversals
/// skipped. Capped at 10 points; larger instances throw.
BruteForceResult brute_force_optimal(const PointSet& points);

/// Standalone SVG with the closed tour polyline and a dot per city.
std::string render_tour_svg(const Genome& tour, const PointSet& points);

/// Engine adapter: minimize closed tour length over visit orders.
struct TspProblem {
    PointSet points;

    std::size_t size() const noexcept { return points.size(); }
    double evaluate(const Genome& tour) const { return tour_length(tour, points); }
    Genome random_genome(SplitMix64& rng) const { return random_permutation(points.size(), rng); }
};

} // namespace hetga::tsp
