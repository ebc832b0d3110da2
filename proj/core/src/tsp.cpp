#include "hetga/tsp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace hetga::tsp {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// Shortest representation that parses back to the same double.
std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

double distance(const Point& p, const Point& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return std::sqrt(dx * dx + dy * dy);
}

double tour_length(const Genome& tour, const PointSet& points) {
    if (tour.size() != points.size()) {
        throw std::invalid_argument("tour_length: tour length differs from point count");
    }
    if (tour.empty()) throw std::invalid_argument("tour_length: empty tour");
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < tour.size(); ++k) {
        total += distance(points[static_cast<std::size_t>(tour[k])],
                          points[static_cast<std::size_t>(tour[k + 1])]);
    }
    total += distance(points[static_cast<std::size_t>(tour.back())],
                      points[static_cast<std::size_t>(tour.front())]);
    return total;
}

PointSet parse_points(std::istream& in, const std::string& source) {
    PointSet points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trimmed(line);
        if (body.empty() || body.front() == '#') continue;
        std::istringstream fields{std::string(body)};
        double x = 0.0;
        double y = 0.0;
        std::string extra;
        if (!(fields >> x >> y)) {
            throw std::runtime_error(source + ":" + std::to_string(line_no) +
                                     ": expected two reals \"x y\"");
        }
        if (fields >> extra) {
            throw std::runtime_error(source + ":" + std::to_string(line_no) +
                                     ": trailing content after \"x y\"");
        }
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw std::runtime_error(source + ":" + std::to_string(line_no) +
                                     ": coordinates must be finite");
        }
        points.push_back(Point{x, y});
    }
    if (points.size() < 2) {
        throw std::runtime_error(source + ": point set needs at least 2 points, got " +
                                 std::to_string(points.size()));
    }
    return points;
}

PointSet load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point file: " + path);
    return parse_points(in, path);
}

void save_points(const PointSet& points, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write point file: " + path);
    for (const Point& p : points) {
        out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
    }
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

PointSet random_instance(std::size_t n, std::uint64_t seed, const Box& box) {
    if (n < 2) throw std::invalid_argument("random_instance: need at least 2 points");
    if (!(box.max_x >= box.min_x) || !(box.max_y >= box.min_y)) {
        throw std::invalid_argument("random_instance: inverted bounding box");
    }
    SplitMix64 rng(mix64(seed));
    PointSet points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = box.min_x + uniform01(rng) * (box.max_x - box.min_x);
        const double y = box.min_y + uniform01(rng) * (box.max_y - box.min_y);
        points.push_back(Point{x, y});
    }
    return points;
}

BruteForceResult brute_force_optimal(const PointSet& points) {
    const std::size_t n = points.size();
    if (n < 2) throw std::invalid_argument("brute_force_optimal: need at least 2 points");
    if (n > kBruteForceCap) {
        throw std::invalid_argument("brute_force_optimal: instance above the enumeration cap of " +
                                    std::to_string(kBruteForceCap) + " points");
    }

    Genome tour(n);
    std::iota(tour.begin(), tour.end(), 0);
    if (n == 2) return BruteForceResult{tour, tour_length(tour, points)};

    // City 0 stays first; tours whose remainder reads larger backwards than
    // forwards are reversals of ones already visited.
    Genome rest(tour.begin() + 1, tour.end());
    Genome best_tour;
    double best_length = std::numeric_limits<double>::infinity();
    Genome candidate(n);
    candidate[0] = 0;
    do {
        if (rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), candidate.begin() + 1);
        const double length = tour_length(candidate, points);
        if (length < best_length) {
            best_length = length;
            best_tour = candidate;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return BruteForceResult{best_tour, best_length};
}

std::string render_tour_svg(const Genome& tour, const PointSet& points) {
    if (tour.size() != points.size()) {
        throw std::invalid_argument("render_tour_svg: tour length differs from point count");
    }
    if (!is_permutation(tour)) {
        throw std::invalid_argument("render_tour_svg: tour is not a permutation");
    }

    double min_x = points.front().x, max_x = points.front().x;
    double min_y = points.front().y, max_y = points.front().y;
    for (const Point& p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double pad = 0.05 * extent;
    const double width = (max_x - min_x) + 2 * pad;
    const double height = (max_y - min_y) + 2 * pad;
    const double stroke = extent / 200.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(min_x - pad)
        << ' ' << format_double(min_y - pad) << ' ' << format_double(width) << ' '
        << format_double(height) << "\" width=\"800\" height=\""
        << format_double(800.0 * height / width) << "\">\n";
    svg << "  <polyline fill=\"none\" stroke=\"#1565c0\" stroke-width=\"" << format_double(stroke)
        << "\" points=\"";
    for (std::size_t k = 0; k <= tour.size(); ++k) {
        const Point& p = points[static_cast<std::size_t>(tour[k % tour.size()])];
        if (k > 0) svg << ' ';
        svg << format_double(p.x) << ',' << format_double(p.y);
    }
    svg << "\"/>\n";
    for (const Point& p : points) {
        svg << "  <circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(p.y)
            << "\" r=\"" << format_double(2 * stroke) << "\" fill=\"#c62828\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace hetga::tsp
