#pragma once

#include <cstdint>

namespace mechlsh {

/// Classic 1-D gradient noise. Gradients come from a seeded integer hash,
/// so the lattice is aperiodic and the output is a pure function of
/// (seed, x). Single octave output is roughly within [-0.5, 0.5].
class PerlinNoise1D {
public:
    explicit PerlinNoise1D(std::uint64_t seed) : seed_(seed) {}

    double sample(double x) const;

    /// Sum of `octaves` octaves, frequency doubling and amplitude decaying
    /// by `persistence` per octave.
    double fractal(double x, int octaves, double persistence = 0.5) const;

private:
    double gradient(std::int64_t cell) const;

    std::uint64_t seed_;
};

} // namespace mechlsh
