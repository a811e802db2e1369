#include "mechlsh/beams.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mechlsh::beams {

namespace {

void check_m_range(int k, double m) {
    if (k < 2) throw std::invalid_argument("a beam needs at least two supports");
    if (k == 2) {
        if (!(m > 0.0 && m < 1.0))
            throw std::invalid_argument("two-support beams need 0 < m < 1");
    } else if (!(m > 0.0 && m <= 1.0 / k)) {
        throw std::invalid_argument("composite beams with k supports need 0 < m <= 1/k");
    }
}

} // namespace

SupportSet SupportSet::create(std::vector<double> positions, double m, double L) {
    const int k = static_cast<int>(positions.size());
    check_m_range(k, m);
    if (L <= 0.0) throw std::invalid_argument("beam length must be positive");
    const double gap = m * L;
    for (int i = 0; i < k; ++i) {
        if (positions[i] < -1e-12 || positions[i] > L + 1e-12)
            throw std::invalid_argument("support position outside [0, L]");
        if (i > 0 && positions[i] - positions[i - 1] < gap - 1e-12)
            throw std::invalid_argument("adjacent supports closer than m*L");
    }
    SupportSet s;
    s.positions = std::move(positions);
    s.m = m;
    s.L = L;
    return s;
}

SupportSet sample_supports(int k, double m, double L, RngStream& rng) {
    check_m_range(k, m);
    if (m * L * (k - 1) > L)
        throw std::invalid_argument("min-gap constraint infeasible for k supports");
    const double gap = m * L;
    std::vector<double> pos(k);
    constexpr long kBudget = 1000000;
    for (long attempt = 0; attempt < kBudget; ++attempt) {
        for (double& p : pos) p = rng.uniform(0.0, L);
        std::sort(pos.begin(), pos.end());
        bool ok = true;
        for (int i = 1; i < k; ++i)
            if (pos[i] - pos[i - 1] < gap) { ok = false; break; }
        if (ok) return SupportSet::create(std::move(pos), m, L);
    }
    throw SamplingError("support rejection sampling exceeded its budget");
}

HashValue reactions_simply_supported(const LoadProfile& load, const SupportSet& supports) {
    if (supports.k() != 2)
        throw std::invalid_argument("simply supported beam needs exactly two supports");
    const double la = supports.positions[0];
    const double lb = supports.positions[1];
    if (lb - la < 1e-12) throw std::invalid_argument("coincident supports");

    const double total = loads::integral(load); // negative for downward loads
    const double moment_a = loads::first_moment(load, 0.0, load.length_L, la);
    const double by = -moment_a / (lb - la);
    const double ay = -total - by;
    return HashValue{{ay, by}, {}};
}

HashValue reactions_composite(const LoadProfile& load, const SupportSet& supports) {
    const int k = supports.k();
    if (k < 3)
        throw std::invalid_argument("composite beam needs at least three supports");
    const auto& s = supports.positions;
    std::vector<double> r(k, 0.0);
    for (int j = 0; j + 1 < k; ++j) {
        const double a = (j == 0) ? 0.0 : s[j];
        const double b = (j == k - 2) ? load.length_L : s[j + 1];
        const double seg_total = loads::integral(load, a, b);
        const double seg_moment = loads::first_moment(load, a, b, s[j]);
        const double right = -seg_moment / (s[j + 1] - s[j]);
        r[j] += -seg_total - right;
        r[j + 1] += right;
    }
    return HashValue{std::move(r), {}};
}

HashValue beam_reactions(const LoadProfile& load, const SupportSet& supports) {
    return supports.k() == 2 ? reactions_simply_supported(load, supports)
                             : reactions_composite(load, supports);
}

BeamEnsemble make_ensemble(int k, double m, double L, std::uint64_t seed) {
    BeamEnsemble e;
    e.seed = seed;
    e.members.reserve(kEnsembleSize);
    auto rng = RngStream(seed);
    for (int i = 0; i < kEnsembleSize; ++i)
        e.members.push_back(sample_supports(k, m, L, rng));
    return e;
}

std::vector<HashValue> ensemble_hash(const LoadProfile& load, const BeamEnsemble& ensemble) {
    std::vector<HashValue> out;
    out.reserve(ensemble.members.size());
    for (const auto& member : ensemble.members)
        out.push_back(beam_reactions(load, member));
    return out;
}

int hard_vote(const std::vector<int>& predictions) {
    if (predictions.empty())
        throw std::invalid_argument("hard vote over an empty prediction set");
    std::map<int, int> counts;
    for (int p : predictions) ++counts[p];
    int best = predictions.front();
    int best_count = 0;
    for (const auto& [label, count] : counts) {
        if (count > best_count) { // map iterates ascending: ties keep the smaller id
            best = label;
            best_count = count;
        }
    }
    return best;
}

} // namespace mechlsh::beams
