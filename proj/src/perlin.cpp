#include "mechlsh/perlin.hpp"

#include "mechlsh/rng.hpp"

#include <cmath>

namespace mechlsh {

namespace {
// Quintic smoothstep, zero first and second derivative at the lattice points.
double fade(double t) { return t * t * t * (t * (t * 6.0 - 15.0) + 10.0); }
} // namespace

double PerlinNoise1D::gradient(std::int64_t cell) const {
    const std::uint64_t h = mix64(seed_, static_cast<std::uint64_t>(cell));
    // map to [-1, 1]
    return static_cast<double>(h >> 11) * 0x1.0p-52 - 1.0;
}

double PerlinNoise1D::sample(double x) const {
    const double fl = std::floor(x);
    const auto cell = static_cast<std::int64_t>(fl);
    const double u = x - fl;
    const double n0 = gradient(cell) * u;
    const double n1 = gradient(cell + 1) * (u - 1.0);
    const double t = fade(u);
    return n0 + t * (n1 - n0);
}

double PerlinNoise1D::fractal(double x, int octaves, double persistence) const {
    double value = 0.0;
    double amplitude = 1.0;
    double frequency = 1.0;
    for (int o = 0; o < octaves; ++o) {
        // shift each octave so lattice points do not pile up at x = 0
        value += amplitude * sample(x * frequency + 31.7 * o);
        amplitude *= persistence;
        frequency *= 2.0;
    }
    return value;
}

} // namespace mechlsh
