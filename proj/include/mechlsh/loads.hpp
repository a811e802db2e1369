#pragma once

#include "mechlsh/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mechlsh::loads {

enum class Norm { Linf, L2 };

/// A normalized load had (numerically) zero area and cannot be scaled.
struct DegenerateLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vertical distributed load w(x) on [0, L], stored as N samples at evenly
/// spaced stations x_i = i * L / (N - 1). Between stations the load is the
/// piecewise linear interpolant. Negative samples point downward.
struct LoadProfile {
    std::vector<double> samples;
    double length_L = 10.0;
    int class_id = 0;     // 1..20 for corpus members, 0 for synthetic loads
    int variant_seed = 0; // noise provenance
    int octave = 0;

    int n() const { return static_cast<int>(samples.size()); }
    double dx() const { return length_L / (n() - 1); }
    double x_at(int i) const { return length_L * i / (n() - 1); }
};

/// Exact integral of the piecewise linear interpolant over [0, L].
/// Coincides with the trapezoidal rule on the sample grid.
double integral(const LoadProfile& w);

/// Exact integral over [a, b] (clipped to [0, L]).
double integral(const LoadProfile& w, double a, double b);

/// Exact first moment: integral of w(x) * (x - about) over [a, b].
double first_moment(const LoadProfile& w, double a, double b, double about);

/// Noise-free base curve for one of the 20 load classes, sampled at N
/// evenly spaced stations. Classes 12-20 (kernel density estimates) consume
/// their point locations from shape_rng; the other classes are closed-form.
LoadProfile generate_class_load(int class_id, double L, int N, RngStream& shape_rng);

/// Base curve plus fractal gradient noise, amplitude_ratio * max|base| peak
/// amplitude on the sample grid. Deterministic in (seed, octave).
LoadProfile add_perlin_noise(const LoadProfile& base, int seed, int octave,
                             double amplitude_ratio = 0.3);

/// Clamp positive excursions to zero, then scale so |integral| = 1.
LoadProfile normalize(const LoadProfile& load);

struct LoadCorpus {
    std::vector<LoadProfile> loads; // class-major: 20 classes x 20 variants
    int grid_N = 0;
    std::uint64_t master_seed = 0;

    std::vector<int> labels() const;
};

inline constexpr int kNumClasses = 20;
inline constexpr int kVariantsPerClass = 20;

/// The full 400-load corpus: for each class one base curve (kernel points
/// drawn once per class), 20 Perlin variants, all normalized. Pure function
/// of (master_seed, L, N, noise_amplitude).
LoadCorpus generate_corpus(std::uint64_t master_seed, double L, int N,
                           double noise_amplitude = 0.3);

double load_distance(const LoadProfile& a, const LoadProfile& b, Norm norm = Norm::Linf);

} // namespace mechlsh::loads
