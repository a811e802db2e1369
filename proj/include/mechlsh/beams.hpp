#pragma once

#include "mechlsh/loads.hpp"
#include "mechlsh/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mechlsh::beams {

using loads::LoadProfile;

/// Rejection sampling gave up before finding a feasible support placement.
struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered support positions on a beam of length L. Adjacent supports are
/// separated by at least m * L. For two supports any 0 < m < 1 is allowed;
/// for k >= 3 supports m <= 1/k, which keeps every placement feasible and
/// reduces to the composite three-support bound m <= 1/3.
struct SupportSet {
    std::vector<double> positions;
    double m = 0.0;
    double L = 10.0;

    int k() const { return static_cast<int>(positions.size()); }

    /// Validates ordering, bounds, minimum gaps, and the m range.
    static SupportSet create(std::vector<double> positions, double m, double L);
};

/// Sensor readouts of one mechanical system under one load: vertical
/// forces, upward positive, ordered by sensor position.
struct HashValue {
    std::vector<double> readouts;
    std::string system_id;

    int ns() const { return static_cast<int>(readouts.size()); }
};

struct BeamEnsemble {
    std::vector<SupportSet> members;
    std::uint64_t seed = 0;
};

inline constexpr int kEnsembleSize = 100;

/// Supports uniform over the feasible region: draw k uniforms on [0, L],
/// sort, accept when every adjacent gap is >= m * L.
SupportSet sample_supports(int k, double m, double L, RngStream& rng);

/// Reaction forces of a simply supported beam (two supports). Loads
/// overhanging the supports are included; moments use the exact piecewise
/// linear load integrals.
HashValue reactions_simply_supported(const LoadProfile& load, const SupportSet& supports);

/// Reaction forces of a simply supported composite beam (k >= 3 supports,
/// adjacent segments joined at the interior supports). Each segment is
/// statically determinate; the load is partitioned at interior supports
/// with the end segments taking the overhangs, and each tributary load is
/// resolved onto the segment's two supports. Interior supports accumulate
/// the shares of both neighboring segments.
HashValue reactions_composite(const LoadProfile& load, const SupportSet& supports);

/// Dispatches on k: two supports -> simply supported, else composite.
HashValue beam_reactions(const LoadProfile& load, const SupportSet& supports);

/// 100 members with common (k, m, L), support draws deterministic in seed.
BeamEnsemble make_ensemble(int k, double m, double L, std::uint64_t seed);

std::vector<HashValue> ensemble_hash(const LoadProfile& load, const BeamEnsemble& ensemble);

/// Modal class label; ties broken toward the smallest class id.
int hard_vote(const std::vector<int>& predictions);

} // namespace mechlsh::beams
