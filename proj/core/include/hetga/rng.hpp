#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hetga {

/// Tiny 64-bit PRNG (splitmix64). One instance per (seed, generation, slot)
/// stream keeps runs bit-identical no matter how evaluation is scheduled.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

    constexpr result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// splitmix64 finalizer; bijective on 64-bit values.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

/// Folds v into h; used to derive independent stream seeds.
constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept {
    return mix64(h ^ (mix64(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

/// Uniform draw in [0, 1) with 53-bit resolution. Never returns 1.0, which
/// the gate semantics rely on.
inline double uniform01(SplitMix64& rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound); bound >= 1.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) noexcept {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(rng()) * static_cast<u128>(bound)) >> 64);
}

/// Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) noexcept {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::swap(values[i - 1], values[uniform_below(rng, i)]);
    }
}

/// Deterministic stream family keyed by (master seed, generation, slot).
struct RngStreams {
    std::uint64_t master_seed = 0;

    SplitMix64 slot(std::uint64_t generation, std::uint64_t slot_index) const noexcept {
        return SplitMix64(hash_combine(hash_combine(master_seed, generation), slot_index));
    }
};

} // namespace hetga
