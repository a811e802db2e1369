#include "mechlsh/loads.hpp"

#include "mechlsh/perlin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mechlsh::loads {

namespace {

void check_grid(int N) {
    if (N < 3) throw std::invalid_argument("load grid needs N >= 3 samples");
}

struct SineParams {
    double k;
    double phi;
};

// classes 6..11
constexpr SineParams kSine[] = {
    {0.5, 0.0}, {1.0, 0.0}, {1.0, 0.25}, {1.5, 0.0}, {1.5, 0.25}, {2.0, 0.0},
};

int kde_point_count(int class_id) {
    if (class_id <= 14) return 2;
    if (class_id <= 17) return 5;
    return 25;
}

// Closed-form class curves. c clears to 1/L (class 1) or 2/L (classes 2-5)
// so every curve carries unit area before noise.
double base_curve(int class_id, double x, double L,
                  const std::vector<double>& kde_points) {
    const double c1 = 1.0 / L;
    const double c2 = 2.0 / L;
    switch (class_id) {
    case 1:
        return -c1;
    case 2:
        return x < L / 2 ? -c2 + (2 * c2 / L) * x : (L / 2 - x) * (2 * c2 / L);
    case 3:
        return x < L / 2 ? -(2 * c2 / L) * x : (2 * c2 / L) * x - 2 * c2;
    case 4:
        return (c2 / L) * x - c2;
    case 5:
        return -(c2 / L) * x;
    default:
        break;
    }
    if (class_id <= 11) {
        const auto [k, phi] = kSine[class_id - 6];
        const double arg = 2.0 * std::numbers::pi * k * x / L - 2.0 * std::numbers::pi * phi;
        return -(std::numbers::pi / (2.0 * L)) * std::abs(std::sin(arg));
    }
    // Gaussian kernel density estimate, bandwidth h = 0.1 L
    const double h = 0.1 * L;
    double sum = 0.0;
    for (double p : kde_points) sum += std::exp(-(x - p) * (x - p) / (2.0 * h * h));
    return -sum / (static_cast<double>(kde_points.size()) * h);
}

} // namespace

double integral(const LoadProfile& w) { return integral(w, 0.0, w.length_L); }

double integral(const LoadProfile& w, double a, double b) {
    const int N = w.n();
    const double d = w.dx();
    a = std::max(a, 0.0);
    b = std::min(b, w.length_L);
    double acc = 0.0;
    for (int i = 0; i + 1 < N; ++i) {
        const double xi = w.x_at(i);
        const double lo = std::max(a, xi) - xi;
        const double hi = std::min(b, xi + d) - xi;
        if (hi <= lo) continue;
        const double s = (w.samples[i + 1] - w.samples[i]) / d;
        acc += w.samples[i] * (hi - lo) + 0.5 * s * (hi * hi - lo * lo);
    }
    return acc;
}

double first_moment(const LoadProfile& w, double a, double b, double about) {
    const int N = w.n();
    const double d = w.dx();
    a = std::max(a, 0.0);
    b = std::min(b, w.length_L);
    double m0 = 0.0, m1 = 0.0;
    for (int i = 0; i + 1 < N; ++i) {
        const double xi = w.x_at(i);
        const double lo = std::max(a, xi) - xi;
        const double hi = std::min(b, xi + d) - xi;
        if (hi <= lo) continue;
        const double s = (w.samples[i + 1] - w.samples[i]) / d;
        const double seg0 = w.samples[i] * (hi - lo) + 0.5 * s * (hi * hi - lo * lo);
        const double seg1 = 0.5 * w.samples[i] * (hi * hi - lo * lo) +
                            s * (hi * hi * hi - lo * lo * lo) / 3.0;
        m0 += seg0;
        m1 += xi * seg0 + seg1;
    }
    return m1 - about * m0;
}

LoadProfile generate_class_load(int class_id, double L, int N, RngStream& shape_rng) {
    if (class_id < 1 || class_id > kNumClasses)
        throw std::domain_error("unknown load class " + std::to_string(class_id));
    check_grid(N);
    std::vector<double> kde_points;
    if (class_id >= 12) {
        kde_points.resize(kde_point_count(class_id));
        for (double& p : kde_points) p = shape_rng.uniform(0.0, L);
    }
    LoadProfile out;
    out.length_L = L;
    out.class_id = class_id;
    out.samples.resize(N);
    for (int i = 0; i < N; ++i)
        out.samples[i] = base_curve(class_id, out.x_at(i), L, kde_points);
    return out;
}

LoadProfile add_perlin_noise(const LoadProfile& base, int seed, int octave,
                             double amplitude_ratio) {
    if (octave < 2 || octave > 10)
        throw std::invalid_argument("octave must lie in [2, 10]");
    LoadProfile out = base;
    out.variant_seed = seed;
    out.octave = octave;
    if (amplitude_ratio == 0.0) return out;

    const int N = base.n();
    double peak_base = 0.0;
    for (double v : base.samples) peak_base = std::max(peak_base, std::abs(v));

    // four lattice cells across the span at the first octave
    const PerlinNoise1D noise(static_cast<std::uint64_t>(static_cast<std::uint32_t>(seed)));
    std::vector<double> raw(N);
    double peak_raw = 0.0;
    for (int i = 0; i < N; ++i) {
        raw[i] = noise.fractal(4.0 * base.x_at(i) / base.length_L, octave);
        peak_raw = std::max(peak_raw, std::abs(raw[i]));
    }
    if (peak_raw < 1e-30) return out;

    const double scale = amplitude_ratio * peak_base / peak_raw;
    for (int i = 0; i < N; ++i) out.samples[i] += scale * raw[i];
    return out;
}

LoadProfile normalize(const LoadProfile& load) {
    LoadProfile out = load;
    for (double& v : out.samples) v = std::min(v, 0.0);
    const double area = integral(out);
    if (std::abs(area) < 1e-12)
        throw DegenerateLoadError("load has zero area after clamping");
    const double scale = -1.0 / area; // area is negative for downward loads
    for (double& v : out.samples) v *= scale;
    return out;
}

std::vector<int> LoadCorpus::labels() const {
    std::vector<int> out;
    out.reserve(loads.size());
    for (const auto& w : loads) out.push_back(w.class_id);
    return out;
}

LoadCorpus generate_corpus(std::uint64_t master_seed, double L, int N,
                           double noise_amplitude) {
    check_grid(N);
    LoadCorpus corpus;
    corpus.grid_N = N;
    corpus.master_seed = master_seed;
    corpus.loads.reserve(kNumClasses * kVariantsPerClass);
    for (int cid = 1; cid <= kNumClasses; ++cid) {
        // one base curve per class; variants differ only by noise
        auto shape_rng = RngStream::child(master_seed, static_cast<std::uint64_t>(cid));
        const LoadProfile base = generate_class_load(cid, L, N, shape_rng);
        auto noise_rng = RngStream::child(master_seed, 1000u + static_cast<std::uint64_t>(cid));
        for (int v = 0; v < kVariantsPerClass; ++v) {
            const int seed = static_cast<int>(noise_rng.next() & 0x7fffffff);
            const int octave = static_cast<int>(noise_rng.uniform_int(2, 10));
            corpus.loads.push_back(normalize(add_perlin_noise(base, seed, octave, noise_amplitude)));
        }
    }
    return corpus;
}

double load_distance(const LoadProfile& a, const LoadProfile& b, Norm norm) {
    if (a.n() != b.n())
        throw std::invalid_argument("load distance needs equal sample counts");
    double acc = 0.0;
    for (int i = 0; i < a.n(); ++i) {
        const double d = a.samples[i] - b.samples[i];
        if (norm == Norm::Linf)
            acc = std::max(acc, std::abs(d));
        else
            acc += d * d;
    }
    return norm == Norm::Linf ? acc : std::sqrt(acc);
}

} // namespace mechlsh::loads
