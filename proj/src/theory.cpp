#include "mechlsh/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mechlsh::theory {

namespace {

LoadProfile flat(double value, int N, double L) {
    LoadProfile w;
    w.length_L = L;
    w.samples.assign(static_cast<size_t>(N), value);
    return w;
}

constexpr double kMValidityCap = 1.0 - 0.5773502691896258; // 1 - sqrt(12)/6

} // namespace

bool is_collision(const HashValue& h1, const HashValue& h2, double S) {
    if (h1.ns() != h2.ns())
        throw std::invalid_argument("collision test needs equal sensor counts");
    for (int i = 0; i < h1.ns(); ++i)
        if (std::abs(h1.readouts[i] - h2.readouts[i]) >= S) return false;
    return true;
}

double collision_radius_ss(double m, double L, double S) {
    if (!(m > 0.0 && m < 1.0))
        throw std::invalid_argument("two-support radius needs 0 < m < 1");
    return 2.0 * m * S / L;
}

double collision_radius_ssc3(double m, double L, double S) {
    if (!(m > 0.0 && m < kMValidityCap && m <= 1.0 / 3.0))
        throw std::invalid_argument(
            "three-support radius needs 0 < m < 1 - sqrt(12)/6 and m <= 1/3");
    const double span = L - m * L;
    return 2.0 * S * m * L / (span * span);
}

std::pair<LoadProfile, LoadProfile> uniform_shift_pair(const LoadProfile& w, double R,
                                                       int sign) {
    LoadProfile shifted = w;
    const double offset = (sign >= 0 ? R : -R);
    for (double& v : shifted.samples) v += offset;
    return {w, std::move(shifted)};
}

std::pair<LoadProfile, LoadProfile> centroid_collision_pair(double q, int N, double L) {
    if (N < 3 || N % 2 == 0)
        throw std::invalid_argument("centroid pair needs odd N >= 3");
    LoadProfile constant = flat(q, N, L);
    LoadProfile spike = flat(0.0, N, L);
    spike.samples[(N - 1) / 2] = q * N;
    return {std::move(constant), std::move(spike)};
}

std::pair<LoadProfile, LoadProfile> spike_triplet_pair(double cR, int t, int N, double L) {
    if (N < 3) throw std::invalid_argument("spike triplet needs N >= 3");
    if (t < 0 || t > N - 3)
        throw std::invalid_argument("spike triplet offset t must lie in [0, N-3]");
    LoadProfile zero = flat(0.0, N, L);
    LoadProfile triplet = zero;
    triplet.samples[t] = -cR / 2.0;
    triplet.samples[t + 1] = cR;
    triplet.samples[t + 2] = -cR / 2.0;
    return {std::move(zero), std::move(triplet)};
}

double p2_analytic(int N) {
    if (N < 3) throw std::invalid_argument("p2 needs N >= 3");
    const double f = static_cast<double>(N - 3) / N;
    return f * f * f;
}

MonteCarloEstimate p2_monte_carlo(int N, double m, long trials, RngStream& rng) {
    if (N < 3) throw std::invalid_argument("p2 needs N >= 3");
    if (trials < 1) throw std::invalid_argument("p2 needs at least one trial");
    if (!(m >= 0.0) || 2.0 * m > 1.0)
        throw std::invalid_argument("infeasible minimum gap for three supports");

    const double L = 1.0; // scale-free
    const double gap = m * L;
    const double cell = L / N;
    long hits = 0;
    double p[3];
    for (long trial = 0; trial < trials; ++trial) {
        // supports uniform with min-gap rejection
        for (;;) {
            for (double& v : p) v = rng.uniform();
            std::sort(std::begin(p), std::end(p));
            if (p[1] - p[0] >= gap && p[2] - p[1] >= gap) break;
        }
        const auto t = rng.uniform_int(0, N - 3);
        const double lo = t * cell;
        const double hi = (t + 3) * cell;
        bool miss = true;
        for (double v : p)
            if (v >= lo && v <= hi) { miss = false; break; }
        hits += miss ? 1 : 0;
    }
    MonteCarloEstimate est;
    est.trials = trials;
    est.value = static_cast<double>(hits) / trials;
    est.std_error = std::sqrt(est.value * (1.0 - est.value) / trials);
    return est;
}

SensitivityParams characterize_ss(double m, double L, double S) {
    SensitivityParams params;
    params.S = S;
    params.R = collision_radius_ss(m, L, S);
    params.c = std::numeric_limits<double>::infinity();
    params.p1 = 1.0;
    params.p2 = 1.0; // equal resultant + centroid defeats every placement
    return params;
}

SensitivityParams characterize_ssc3(double m, double L, double S, int N, double c,
                                    long trials, RngStream& rng) {
    if (!(c > 1.0)) throw std::invalid_argument("approximation factor c must exceed 1");
    SensitivityParams params;
    params.S = S;
    params.R = collision_radius_ssc3(m, L, S);
    params.c = c;
    params.p1 = 1.0;
    params.p2 = p2_monte_carlo(N, m, trials, rng).value;
    return params;
}

} // namespace mechlsh::theory
