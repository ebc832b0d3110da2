// hetga: benchmark CLI for the crossover-gated GA library.
//
// Subcommands:
//   run      one seeded battery under a single gating policy, CSV out
//   compare  paired batteries under both policies, summary table + CSV
//   oracle   exact references: n-queens solution counts, brute-force TSP
//   render   board/tour SVG (or text board) from a saved genome

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hetga/bench.hpp"

namespace {

using hetga::bench::ExperimentSpec;
using hetga::bench::KeyValues;

// Spec keys accepted both in config files and as flags; flags win.
struct SpecFlags {
    std::string config;
    std::string problem;
    std::string n;
    std::string points_file;
    std::string population;
    std::string generations;
    std::string crossover_prob;
    std::string mutation_prob;
    std::string elitism;
    std::string runs;
    std::string heterogeneous;
    std::string seed;

    void attach(CLI::App& cmd) {
        cmd.add_option("--config", config, "config file with key = value lines");
        cmd.add_option("--problem", problem, "nqueens or tsp");
        cmd.add_option("--n", n, "board size (nqueens) or point count (random tsp)");
        cmd.add_option("--points-file", points_file, "tsp point file, one \"x y\" per line");
        cmd.add_option("--population", population, "population size");
        cmd.add_option("--generations", generations, "generation budget");
        cmd.add_option("--crossover-prob", crossover_prob,
                       "gate probability for the homogeneous policy");
        cmd.add_option("--mutation-prob", mutation_prob, "per-individual swap probability");
        cmd.add_option("--elitism", elitism, "best individuals copied unchanged");
        cmd.add_option("--runs", runs, "runs per battery");
        cmd.add_option("--heterogeneous", heterogeneous,
                       "true: fitness-scaled gating, false: fixed probability");
        cmd.add_option("--seed", seed, "master seed; run r uses seed + r");
    }

    ExperimentSpec to_spec() const {
        KeyValues kv;
        if (!config.empty()) {
            std::ifstream in(config);
            if (!in) throw std::invalid_argument("cannot open config file: " + config);
            kv = hetga::bench::parse_kv_text(in, config);
        }
        const auto add = [&kv](const char* key, const std::string& value) {
            if (!value.empty()) kv.emplace_back(key, value);
        };
        add("problem", problem);
        add("n", n);
        add("points_file", points_file);
        add("population", population);
        add("generations", generations);
        add("crossover_prob", crossover_prob);
        add("mutation_prob", mutation_prob);
        add("elitism", elitism);
        add("runs", runs);
        add("heterogeneous", heterogeneous);
        add("seed", seed);
        return hetga::bench::spec_from_kv(kv);
    }
};

void check_scale(const ExperimentSpec& spec, bool allow_large) {
    if (spec.n > 100 && !allow_large) {
        throw std::invalid_argument(
            "n > 100 can run for a long time; pass --allow-large to do it anyway");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossover-gated genetic algorithm benchmarks (n-queens, euclidean tsp)"};
    app.require_subcommand(1);

    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads per run (results are thread-invariant)")
        ->capture_default_str();

    // run
    auto* run_cmd = app.add_subcommand("run", "run one battery under a single policy");
    SpecFlags run_flags;
    run_flags.attach(*run_cmd);
    std::string run_out, run_svg, run_save_best;
    bool run_allow_large = false;
    run_cmd->add_option("--out", run_out, "write the CSV here instead of stdout");
    run_cmd->add_option("--svg", run_svg, "render the battery's best individual to this SVG");
    run_cmd->add_option("--save-best", run_save_best, "save the best genome as integers");
    run_cmd->add_flag("--allow-large", run_allow_large, "permit n > 100");
    run_cmd->callback([&] {
        const ExperimentSpec spec = run_flags.to_spec();
        check_scale(spec, run_allow_large);
        const auto battery = hetga::bench::run_battery(spec, threads);
        if (run_out.empty()) {
            hetga::bench::emit_csv(battery.rows, std::cout);
        } else {
            hetga::bench::emit_csv(battery.rows, run_out);
            std::size_t solved = 0;
            for (const auto& row : battery.rows) solved += row.solved ? 1 : 0;
            std::cout << "wrote " << battery.rows.size() << " rows to " << run_out << " ("
                      << solved << " solved, best " << battery.best.fitness << ")\n";
        }
        if (!run_svg.empty()) hetga::bench::emit_svg(spec, battery.best.genome, run_svg);
        if (!run_save_best.empty()) hetga::bench::save_genome(battery.best.genome, run_save_best);
    });

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "run paired batteries under both policies");
    SpecFlags cmp_flags;
    cmp_flags.attach(*cmp_cmd);
    std::string cmp_out;
    bool cmp_allow_large = false;
    cmp_cmd->add_option("--out", cmp_out, "write both batteries' rows to one CSV");
    cmp_cmd->add_flag("--allow-large", cmp_allow_large, "permit n > 100");
    cmp_cmd->callback([&] {
        ExperimentSpec het = cmp_flags.to_spec();
        check_scale(het, cmp_allow_large);
        ExperimentSpec hom = het;
        het.heterogeneous = true;
        hom.heterogeneous = false;
        const auto rows_het = hetga::bench::run_battery(het, threads).rows;
        const auto rows_hom = hetga::bench::run_battery(hom, threads).rows;
        std::cout << hetga::bench::format_summary(
            hetga::bench::compare(het, rows_het, hom, rows_hom));
        if (!cmp_out.empty()) {
            auto combined = rows_het;
            combined.insert(combined.end(), rows_hom.begin(), rows_hom.end());
            hetga::bench::emit_csv(combined, cmp_out);
            std::cout << "wrote " << combined.size() << " rows to " << cmp_out << '\n';
        }
    });

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact solution counts / brute-force optima");
    std::string oracle_problem, oracle_points;
    std::uint64_t oracle_n = 0, oracle_seed = 1;
    oracle_cmd->add_option("--problem", oracle_problem, "nqueens or tsp")->required();
    oracle_cmd->add_option("--n", oracle_n, "board size, or point count for a random instance");
    oracle_cmd->add_option("--points-file", oracle_points, "tsp point file");
    oracle_cmd->add_option("--seed", oracle_seed, "seed for a random tsp instance");
    oracle_cmd->callback([&] {
        if (oracle_problem == "nqueens") {
            if (oracle_n == 0) throw std::invalid_argument("oracle --problem nqueens needs --n");
            std::cout << hetga::nqueens::enumerate_solutions(static_cast<int>(oracle_n)) << '\n';
        } else if (oracle_problem == "tsp") {
            hetga::tsp::PointSet points;
            if (!oracle_points.empty()) {
                points = hetga::tsp::load_points(oracle_points);
            } else if (oracle_n >= 2) {
                points = hetga::tsp::random_instance(oracle_n, oracle_seed);
            } else {
                throw std::invalid_argument("oracle --problem tsp needs --points-file or --n");
            }
            const auto opt = hetga::tsp::brute_force_optimal(points);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", opt.length);
            std::cout << "optimal_length " << buf << "\ntour";
            for (const int city : opt.tour) std::cout << ' ' << city;
            std::cout << '\n';
        } else {
            throw std::invalid_argument("oracle --problem must be nqueens or tsp");
        }
    });

    // render
    auto* render_cmd = app.add_subcommand("render", "render a saved genome");
    std::string render_problem, render_genome, render_points, render_out;
    std::uint64_t render_seed = 1;
    bool render_text = false;
    render_cmd->add_option("--problem", render_problem, "nqueens or tsp")->required();
    render_cmd->add_option("--genome", render_genome, "genome file (whitespace-separated ints)")
        ->required();
    render_cmd->add_option("--points-file", render_points, "tsp point file");
    render_cmd->add_option("--seed", render_seed, "seed for a random tsp instance");
    render_cmd->add_option("--out", render_out, "output SVG path");
    render_cmd->add_flag("--text", render_text, "print the text board (nqueens)");
    render_cmd->callback([&] {
        const hetga::Genome genome = hetga::bench::load_genome(render_genome);
        if (render_problem == "nqueens") {
            if (render_text || render_out.empty()) {
                std::cout << hetga::nqueens::render_board_text(genome);
            }
            if (!render_out.empty()) {
                std::ofstream out(render_out);
                if (!out) throw std::runtime_error("cannot write SVG: " + render_out);
                out << hetga::nqueens::render_board_svg(genome);
            }
        } else if (render_problem == "tsp") {
            if (render_out.empty()) throw std::invalid_argument("render --problem tsp needs --out");
            hetga::tsp::PointSet points;
            if (!render_points.empty()) {
                points = hetga::tsp::load_points(render_points);
            } else {
                points = hetga::tsp::random_instance(genome.size(), render_seed);
            }
            std::ofstream out(render_out);
            if (!out) throw std::runtime_error("cannot write SVG: " + render_out);
            out << hetga::tsp::render_tour_svg(genome, points);
        } else {
            throw std::invalid_argument("render --problem must be nqueens or tsp");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
