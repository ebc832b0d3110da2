#pragma once

#include <cstdint>

namespace hetga {

/// Operator-application counters; the quantities compared across gating
/// policies. Merging is fieldwise addition, so per-thread partial counts can
/// be combined in any order.
struct Counters {
    std::uint64_t crossover_ops = 0;   ///< crossover operator invocations (one per open gate)
    std::uint64_t objective_evals = 0; ///< objective function evaluations
    std::uint64_t generations = 0;
    double wall_ms = 0.0; ///< excluded from determinism comparisons

    void record_crossover() noexcept { ++crossover_ops; }
    void record_eval() noexcept { ++objective_evals; }
    void record_generation() noexcept { ++generations; }

    Counters& operator+=(const Counters& other) noexcept {
        crossover_ops += other.crossover_ops;
        objective_evals += other.objective_evals;
        generations += other.generations;
        wall_ms += other.wall_ms;
        return *this;
    }

    friend Counters operator+(Counters lhs, const Counters& rhs) noexcept { return lhs += rhs; }

    friend bool operator==(const Counters&, const Counters&) = default;

    /// Counting fields untouched; wall clock set from an elapsed measurement.
    [[nodiscard]] Counters with_wall_ms(double elapsed_ms) const noexcept {
        Counters c = *this;
        c.wall_ms = elapsed_ms;
        return c;
    }
};

} // namespace hetga
