#pragma once

#include "mechlsh/beams.hpp"
#include "mechlsh/loads.hpp"

#include <array>
#include <string>
#include <vector>

namespace mechlsh::metrics {

using beams::HashValue;
using loads::LoadCorpus;
using loads::Norm;

inline constexpr int kBins = 5;

/// Binned collision-probability curve: all unordered pairs split into
/// equal-count bins by input distance, collision fraction per bin.
struct CollisionCurve {
    std::array<double, kBins> bin_centers{};   // mean load distance per bin
    std::array<double, kBins> p_collision{};
    std::array<long, kBins> bin_pair_counts{};
    double S = 0.0;
};

struct EvalReport {
    std::string system_id;
    double spearman_rho = 0.0;
    double accuracy = 0.0;
    CollisionCurve curve;
};

/// Readout vectors scaled to sum to one (no-op when the sum is already
/// one), so beam and FEM hashes share a scale before any metric runs.
std::vector<std::vector<double>> normalized_rows(const std::vector<HashValue>& hashes);

/// Unordered pairwise distances in (i, j), i < j lexicographic order.
std::vector<double> pairwise_distances(const std::vector<std::vector<double>>& rows,
                                       Norm norm = Norm::Linf);

std::vector<double> pairwise_load_distances(const LoadCorpus& corpus,
                                            Norm norm = Norm::Linf);

CollisionCurve collision_curve(const std::vector<double>& load_dists,
                               const std::vector<HashValue>& hashes, double S);

/// Rank correlation with average ranks for ties (Pearson on ranks when
/// ties exist, the closed-form rank-difference formula otherwise).
double spearman_rho(const std::vector<double>& a, const std::vector<double>& b);

/// Per-item leave-one-out k-nearest-neighbor predictions (distance ties
/// and vote ties break toward the lowest index / smallest label).
std::vector<int> knn_loo_predictions(const std::vector<std::vector<double>>& rows,
                                     const std::vector<int>& labels, int k = 1,
                                     Norm metric = Norm::Linf);

double knn_loo_accuracy(const std::vector<HashValue>& hashes, const std::vector<int>& labels,
                        int k = 1, Norm metric = Norm::Linf);

/// Ensemble variant: each member predicts through its own leave-one-out
/// 1-NN, a hard vote per held-out item aggregates the member predictions.
double ensemble_loo_accuracy(const std::vector<std::vector<HashValue>>& member_hashes,
                             const std::vector<int>& labels);

/// Row = true class, column = predicted class, 1-based labels.
std::vector<std::vector<int>> confusion_matrix(const std::vector<int>& predictions,
                                               const std::vector<int>& labels,
                                               int num_classes = loads::kNumClasses);

} // namespace mechlsh::metrics
