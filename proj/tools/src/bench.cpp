#include "hetga/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace hetga::bench {

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

[[noreturn]] void bad_key(const std::string& key, const std::string& what) {
    throw std::invalid_argument("key \"" + key + "\": " + what);
}

std::uint64_t parse_u64(const std::string& key, std::string_view value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_key(key, "not a valid non-negative integer: \"" + std::string(value) + "\"");
    }
    return out;
}

double parse_probability(const std::string& key, std::string_view value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_key(key, "not a valid real number: \"" + std::string(value) + "\"");
    }
    if (!(out >= 0.0 && out <= 1.0)) {
        bad_key(key, "probability out of range [0, 1]: \"" + std::string(value) + "\"");
    }
    return out;
}

bool parse_bool(const std::string& key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    bad_key(key, "expected true/false: \"" + std::string(value) + "\"");
}

const char* policy_name(bool heterogeneous) {
    return heterogeneous ? "heterogeneous" : "homogeneous";
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

double ratio(double a, double b) {
    if (b != 0.0) return a / b;
    return a == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

PolicyStats stats_of(const std::vector<BenchRow>& rows) {
    PolicyStats s;
    for (const BenchRow& r : rows) {
        s.solve_rate += r.solved ? 1.0 : 0.0;
        s.mean_best_fitness += r.best_fitness;
        s.mean_crossover_ops += static_cast<double>(r.crossover_ops);
        s.mean_objective_evals += static_cast<double>(r.objective_evals);
        s.mean_wall_ms += r.wall_ms;
    }
    const double count = static_cast<double>(rows.size());
    s.solve_rate /= count;
    s.mean_best_fitness /= count;
    s.mean_crossover_ops /= count;
    s.mean_objective_evals /= count;
    s.mean_wall_ms /= count;
    return s;
}

} // namespace

void ExperimentSpec::validate() const {
    if (problem == ProblemKind::nqueens) {
        if (n == 0) throw std::invalid_argument("key \"n\": required for problem = nqueens");
    } else {
        if (points_file.empty() && n == 0) {
            throw std::invalid_argument(
                "problem = tsp needs key \"points_file\" or key \"n\" for a random instance");
        }
        if (points_file.empty() && n < 2) {
            throw std::invalid_argument("key \"n\": a random tsp instance needs at least 2 points");
        }
    }
    if (population < 2) throw std::invalid_argument("key \"population\": must be at least 2");
    if (elitism >= population) {
        throw std::invalid_argument("key \"elitism\": must be smaller than population");
    }
    if (runs == 0) throw std::invalid_argument("key \"runs\": must be at least 1");
}

KeyValues parse_kv_text(std::istream& in, const std::string& source) {
    KeyValues kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trimmed(line);
        if (body.empty() || body.front() == '#') continue;
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument(source + ":" + std::to_string(line_no) +
                                        ": expected \"key = value\"");
        }
        const std::string key{trimmed(body.substr(0, eq))};
        const std::string value{trimmed(body.substr(eq + 1))};
        if (key.empty()) {
            throw std::invalid_argument(source + ":" + std::to_string(line_no) + ": empty key");
        }
        kv.emplace_back(key, value);
    }
    return kv;
}

ExperimentSpec spec_from_kv(const KeyValues& kv) {
    ExperimentSpec spec;
    bool problem_set = false;
    for (const auto& [key, value] : kv) {
        if (key == "problem") {
            if (value == "nqueens") {
                spec.problem = ProblemKind::nqueens;
            } else if (value == "tsp") {
                spec.problem = ProblemKind::tsp;
            } else {
                bad_key(key, "expected nqueens or tsp: \"" + value + "\"");
            }
            problem_set = true;
        } else if (key == "n") {
            spec.n = parse_u64(key, value);
            if (spec.n == 0) bad_key(key, "must be a positive integer");
        } else if (key == "points_file") {
            spec.points_file = value;
        } else if (key == "population") {
            spec.population = parse_u64(key, value);
        } else if (key == "generations") {
            spec.generations = parse_u64(key, value);
        } else if (key == "crossover_prob") {
            spec.crossover_prob = parse_probability(key, value);
        } else if (key == "mutation_prob") {
            spec.mutation_prob = parse_probability(key, value);
        } else if (key == "elitism") {
            spec.elitism = parse_u64(key, value);
        } else if (key == "runs") {
            spec.runs = parse_u64(key, value);
        } else if (key == "heterogeneous") {
            spec.heterogeneous = parse_bool(key, value);
        } else if (key == "seed") {
            spec.seed = parse_u64(key, value);
        } else {
            throw std::invalid_argument("unknown key \"" + key + "\"");
        }
    }
    if (!problem_set) throw std::invalid_argument("missing required key \"problem\"");
    spec.validate();
    return spec;
}

ExperimentSpec parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return spec_from_kv(parse_kv_text(in, path));
}

tsp::PointSet load_instance(const ExperimentSpec& spec) {
    if (!spec.points_file.empty()) return tsp::load_points(spec.points_file);
    return tsp::random_instance(spec.n, spec.seed);
}

BatteryResult run_battery(const ExperimentSpec& spec, unsigned threads) {
    spec.validate();
    const GatingPolicy policy = spec.heterogeneous
                                    ? GatingPolicy::heterogeneous()
                                    : GatingPolicy::homogeneous(spec.crossover_prob);
    BatteryResult result;
    result.rows.reserve(spec.runs);

    const auto record = [&](const RunReport& report, std::size_t run_id) {
        result.rows.push_back(BenchRow{run_id, policy.name(), report.solved,
                                       report.final_best.fitness, report.counters.crossover_ops,
                                       report.counters.objective_evals, report.generations_used,
                                       report.counters.wall_ms, report.seed});
        if (result.best.genome.empty() || report.final_best.fitness < result.best.fitness) {
            result.best = report.final_best;
        }
    };

    GAConfig cfg;
    cfg.population_size = spec.population;
    cfg.generations = spec.generations;
    cfg.crossover_prob = spec.crossover_prob;
    cfg.mutation_prob = spec.mutation_prob;
    cfg.elitism = spec.elitism;

    if (spec.problem == ProblemKind::nqueens) {
        const nqueens::NQueensProblem problem{spec.n};
        for (std::size_t r = 0; r < spec.runs; ++r) {
            cfg.seed = spec.seed + r;
            record(evolve(cfg, policy, problem, 0.0, threads), r);
        }
    } else {
        const tsp::TspProblem problem{load_instance(spec)};
        for (std::size_t r = 0; r < spec.runs; ++r) {
            cfg.seed = spec.seed + r;
            record(evolve(cfg, policy, problem, std::nullopt, threads), r);
        }
    }
    return result;
}

CompareSummary compare(const ExperimentSpec& spec_a, const std::vector<BenchRow>& rows_a,
                       const ExperimentSpec& spec_b, const std::vector<BenchRow>& rows_b) {
    ExperimentSpec normalized_a = spec_a;
    normalized_a.heterogeneous = spec_b.heterogeneous;
    if (normalized_a != spec_b) {
        throw std::invalid_argument("compare: batteries come from different specs");
    }
    if (spec_a.heterogeneous == spec_b.heterogeneous) {
        throw std::invalid_argument("compare: batteries use the same gating policy");
    }
    const auto check_rows = [](const ExperimentSpec& spec, const std::vector<BenchRow>& rows,
                               const char* which) {
        if (rows.size() != spec.runs) {
            throw std::invalid_argument(std::string("compare: ") + which +
                                        " battery row count differs from spec.runs");
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].policy != policy_name(spec.heterogeneous) || rows[r].run_id != r ||
                rows[r].seed != spec.seed + r) {
                throw std::invalid_argument(std::string("compare: ") + which +
                                            " battery rows do not match their spec");
            }
        }
    };
    check_rows(spec_a, rows_a, "first");
    check_rows(spec_b, rows_b, "second");

    CompareSummary summary;
    summary.policy_a = policy_name(spec_a.heterogeneous);
    summary.policy_b = policy_name(spec_b.heterogeneous);
    summary.runs = spec_a.runs;
    summary.a = stats_of(rows_a);
    summary.b = stats_of(rows_b);
    summary.ratio_solve_rate = ratio(summary.a.solve_rate, summary.b.solve_rate);
    summary.ratio_best_fitness = ratio(summary.a.mean_best_fitness, summary.b.mean_best_fitness);
    summary.ratio_crossover_ops = ratio(summary.a.mean_crossover_ops, summary.b.mean_crossover_ops);
    summary.ratio_wall_ms = ratio(summary.a.mean_wall_ms, summary.b.mean_wall_ms);
    return summary;
}

std::string format_summary(const CompareSummary& summary) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-18s %16s %16s %12s\n", "metric", summary.policy_a.c_str(),
                  summary.policy_b.c_str(), "a/b");
    out << "policy comparison over " << summary.runs << " paired runs\n" << line;
    const auto row = [&](const char* name, double a, double b, double r) {
        std::snprintf(line, sizeof line, "%-18s %16.6f %16.6f %12.6f\n", name, a, b, r);
        out << line;
    };
    row("solve_rate", summary.a.solve_rate, summary.b.solve_rate, summary.ratio_solve_rate);
    row("best_fitness", summary.a.mean_best_fitness, summary.b.mean_best_fitness,
        summary.ratio_best_fitness);
    row("crossover_ops", summary.a.mean_crossover_ops, summary.b.mean_crossover_ops,
        summary.ratio_crossover_ops);
    row("wall_ms", summary.a.mean_wall_ms, summary.b.mean_wall_ms, summary.ratio_wall_ms);
    return out.str();
}

void emit_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    if (rows.empty()) throw std::invalid_argument("emit_csv: no rows");
    out << kCsvHeader << '\n';
    for (const BenchRow& r : rows) {
        out << r.run_id << ',' << r.policy << ',' << (r.solved ? 1 : 0) << ','
            << fixed(r.best_fitness, 6) << ',' << r.crossover_ops << ',' << r.objective_evals
            << ',' << r.generations_used << ',' << fixed(r.wall_ms, 3) << ',' << r.seed << '\n';
    }
}

void emit_csv(const std::vector<BenchRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    emit_csv(rows, out);
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

std::vector<BenchRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || std::string_view(trimmed(line)) != kCsvHeader) {
        throw std::runtime_error("read_csv: missing or mismatched header");
    }
    std::vector<BenchRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trimmed(line);
        if (body.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            fields.emplace_back(body.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 9) {
            throw std::runtime_error("read_csv: line " + std::to_string(line_no) +
                                     ": expected 9 fields");
        }
        BenchRow r;
        r.run_id = parse_u64("run_id", fields[0]);
        r.policy = fields[1];
        r.solved = parse_bool("solved", fields[2]);
        r.best_fitness = std::stod(fields[3]);
        r.crossover_ops = parse_u64("crossover_ops", fields[4]);
        r.objective_evals = parse_u64("objective_evals", fields[5]);
        r.generations_used = parse_u64("generations_used", fields[6]);
        r.wall_ms = std::stod(fields[7]);
        r.seed = parse_u64("seed", fields[8]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<BenchRow> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV: " + path);
    return read_csv(in);
}

void emit_svg(const ExperimentSpec& spec, const Genome& best, const std::string& path) {
    const std::string svg = spec.problem == ProblemKind::nqueens
                                ? nqueens::render_board_svg(best)
                                : tsp::render_tour_svg(best, load_instance(spec));
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SVG: " + path);
    out << svg;
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

Genome load_genome(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open genome file: " + path);
    Genome g;
    int v = 0;
    while (in >> v) g.push_back(v);
    if (!in.eof()) throw std::runtime_error("genome file has non-integer content: " + path);
    if (g.empty()) throw std::runtime_error("genome file is empty: " + path);
    return g;
}

void save_genome(const Genome& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write genome file: " + path);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) out << ' ';
        out << g[i];
    }
    out << '\n';
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

} // namespace hetga::bench
