#pragma once

/// Benchmark harness behind the CLI: experiment configuration, seeded run
/// batteries for either gating policy, CSV reports and policy comparisons.
/// Per-run seeds are master_seed + run_id, so batteries are reproducible run
/// by run and the two policies of a comparison start from identical
/// populations.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hetga/engine.hpp"
#include "hetga/nqueens.hpp"
#include "hetga/tsp.hpp"

namespace hetga::bench {

enum class ProblemKind { nqueens, tsp };

struct ExperimentSpec {
    ProblemKind problem = ProblemKind::nqueens;
    std::size_t n = 0; ///< board size, or point count for random tsp instances
    std::string points_file;
    std::size_t population = 300;
    std::size_t generations = 500;
    double crossover_prob = 0.9;
    double mutation_prob = 0.1;
    std::size_t elitism = 1;
    std::size_t runs = 10;
    bool heterogeneous = true;
    std::uint64_t seed = 1;

    void validate() const; ///< throws std::invalid_argument naming the key

    friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

/// One row per (policy, run) in the report CSV.
struct BenchRow {
    std::size_t run_id = 0;
    std::string policy;
    bool solved = false;
    double best_fitness = 0.0;
    std::uint64_t crossover_ops = 0;
    std::uint64_t objective_evals = 0;
    std::size_t generations_used = 0;
    double wall_ms = 0.0;
    std::uint64_t seed = 0;
};

/// Ordered key/value pairs; later entries override earlier ones, which is
/// how command-line flags override config-file values.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Parses line-oriented "key = value" text. '#' lines and blank lines are
/// skipped. Only the syntax is checked here; keys and values are validated
/// by spec_from_kv.
KeyValues parse_kv_text(std::istream& in, const std::string& source);

/// Builds a validated spec from merged key/values. Unknown keys, malformed
/// or out-of-range values, and missing required keys throw
/// std::invalid_argument naming the key.
ExperimentSpec spec_from_kv(const KeyValues& kv);

/// parse_kv_text + spec_from_kv over a config file.
ExperimentSpec parse_config(const std::string& path);

/// The point set a tsp spec runs against: points_file when set, otherwise a
/// random instance from (n, seed) in the unit box.
tsp::PointSet load_instance(const ExperimentSpec& spec);

struct BatteryResult {
    std::vector<BenchRow> rows; ///< one per run, ordered by run_id
    Individual best;            ///< best individual across all runs
};

/// Executes spec.runs seeded runs under the spec's policy. Deterministic
/// modulo wall_ms.
BatteryResult run_battery(const ExperimentSpec& spec, unsigned threads = 1);

struct PolicyStats {
    double solve_rate = 0.0;
    double mean_best_fitness = 0.0;
    double mean_crossover_ops = 0.0;
    double mean_objective_evals = 0.0;
    double mean_wall_ms = 0.0;
};

/// Positional summary: ratios are first-battery over second-battery.
struct CompareSummary {
    std::string policy_a;
    std::string policy_b;
    std::size_t runs = 0;
    PolicyStats a;
    PolicyStats b;
    double ratio_solve_rate = 0.0;
    double ratio_best_fitness = 0.0;
    double ratio_crossover_ops = 0.0;
    double ratio_wall_ms = 0.0;
};

/// Summarizes two batteries over the same spec differing only in policy;
/// anything else mismatched throws std::invalid_argument.
CompareSummary compare(const ExperimentSpec& spec_a, const std::vector<BenchRow>& rows_a,
                       const ExperimentSpec& spec_b, const std::vector<BenchRow>& rows_b);

std::string format_summary(const CompareSummary& summary);

inline constexpr const char* kCsvHeader =
    "run_id,policy,solved,best_fitness,crossover_ops,objective_evals,generations_used,wall_ms,seed";

/// Writes the report CSV: exact header above, fitness with 6 decimals,
/// wall_ms with 3. Empty row sets are rejected.
void emit_csv(const std::vector<BenchRow>& rows, std::ostream& out);
void emit_csv(const std::vector<BenchRow>& rows, const std::string& path);

/// Parses emit_csv output back; the header must match exactly.
std::vector<BenchRow> read_csv(std::istream& in);
std::vector<BenchRow> read_csv_file(const std::string& path);

/// Renders the best individual: board SVG for nqueens, tour SVG for tsp.
void emit_svg(const ExperimentSpec& spec, const Genome& best, const std::string& path);

/// Genome files: whitespace-separated integers.
Genome load_genome(const std::string& path);
void save_genome(const Genome& g, const std::string& path);

} // namespace hetga::bench
