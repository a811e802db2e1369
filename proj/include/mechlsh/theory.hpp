#pragma once

#include "mechlsh/beams.hpp"
#include "mechlsh/loads.hpp"
#include "mechlsh/rng.hpp"

#include <utility>

namespace mechlsh::theory {

using beams::HashValue;
using loads::LoadProfile;

/// Parameters of the (R, cR, p1, p2) sensitivity statement for a hash
/// family at bucket size S. The family is sensitive iff p1 > p2.
struct SensitivityParams {
    double R = 0.0;
    double c = 1.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double S = 0.0;

    bool sensitive() const { return p1 > p2; }
};

/// True iff every readout pair lies within the bucket size: max_i |h1_i - h2_i| < S.
bool is_collision(const HashValue& h1, const HashValue& h2, double S);

/// Guaranteed-collision input radius for two-support beams: R = 2 m S / L.
double collision_radius_ss(double m, double L, double S);

/// Guaranteed-collision input radius for three-support composite beams:
/// R = 2 S m L / (L - m L)^2, valid for 0 < m < 1 - sqrt(12)/6 and m <= 1/3.
double collision_radius_ssc3(double m, double L, double S);

/// (w, w +/- R * 1): the uniform offset pair at Linf distance exactly R.
std::pair<LoadProfile, LoadProfile> uniform_shift_pair(const LoadProfile& w, double R,
                                                       int sign = +1);

/// Constant load q vs. a central spike of height q*N on the middle sample
/// (N odd). Both carry the same resultant and centroid, so every
/// two-support beam hashes them together; their Linf distance is q*(N-1).
std::pair<LoadProfile, LoadProfile> centroid_collision_pair(double q, int N, double L);

/// Zero load vs. the {-cR/2, +cR, -cR/2} spike triplet on samples
/// t, t+1, t+2. The triplet has zero resultant and zero moment, so supports
/// clear of it cannot see it.
std::pair<LoadProfile, LoadProfile> spike_triplet_pair(double cR, int t, int N, double L);

/// Probability that three independently placed supports all miss a width
/// 3L/N window, in the limit of no minimum gap: ((N - 3) / N)^3.
double p2_analytic(int N);

struct MonteCarloEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

/// Monte-Carlo estimate of the miss probability for three supports with
/// minimum gap m*L and a uniformly placed width 3L/N window. m = 0 is
/// allowed and reproduces p2_analytic.
MonteCarloEstimate p2_monte_carlo(int N, double m, long trials, RngStream& rng);

/// Sensitivity summary for the two-support family: p1 = 1 at R = 2mS/L,
/// but the centroid pair collides for every placement, so p2 = 1 at
/// arbitrarily large c and the family is not sensitive.
SensitivityParams characterize_ss(double m, double L, double S);

/// Sensitivity summary for the three-support composite family: p1 = 1 at
/// the closed-form R, p2 estimated by Monte-Carlo for the worst-case spike
/// triplet at discretization N.
SensitivityParams characterize_ssc3(double m, double L, double S, int N, double c,
                                    long trials, RngStream& rng);

} // namespace mechlsh::theory
