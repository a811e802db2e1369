#pragma once

#include <cstdint>
#include <random>

namespace mechlsh {

// Stateless 64-bit mixer (splitmix64 finalizer). Used for seed derivation
// and lattice gradient hashing so that results do not depend on the
// standard library's distribution implementations.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ (b * 0xd6e8feb86659fd93ULL));
}

/// Deterministic random stream. The engine is std::mt19937_64 (bit-exact
/// across platforms by the standard); uniform doubles and bounded integers
/// are produced with fixed arithmetic rather than std:: distributions,
/// which are implementation-defined.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Child stream for an independent substream (per class, per system, ...).
    static RngStream child(std::uint64_t master, std::uint64_t index) {
        return RngStream(mix64(master, index));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const auto wide = static_cast<unsigned __int128>(next());
        return lo + static_cast<std::int64_t>((wide * span) >> 64);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace mechlsh
