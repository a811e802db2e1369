#include "mechlsh/metrics.hpp"

#include "mechlsh/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mechlsh::metrics {

namespace {

double row_distance(const std::vector<double>& a, const std::vector<double>& b, Norm norm) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (norm == Norm::Linf)
            acc = std::max(acc, std::abs(d));
        else
            acc += d * d;
    }
    return norm == Norm::Linf ? acc : std::sqrt(acc);
}

// average ranks, 1-based; reports whether any tie was seen
std::vector<double> average_ranks(const std::vector<double>& v, bool& had_ties) {
    const size_t n = v.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        if (j > i) had_ties = true;
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
        i = j + 1;
    }
    return ranks;
}

} // namespace

std::vector<std::vector<double>> normalized_rows(const std::vector<HashValue>& hashes) {
    std::vector<std::vector<double>> rows;
    rows.reserve(hashes.size());
    for (const auto& h : hashes) {
        std::vector<double> r = h.readouts;
        const double sum = std::accumulate(r.begin(), r.end(), 0.0);
        if (std::abs(sum) > 1e-12 && std::abs(sum - 1.0) > 1e-15)
            for (double& v : r) v /= sum;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<double> pairwise_distances(const std::vector<std::vector<double>>& rows,
                                       Norm norm) {
    const size_t n = rows.size();
    std::vector<double> out;
    out.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            out.push_back(row_distance(rows[i], rows[j], norm));
    return out;
}

std::vector<double> pairwise_load_distances(const LoadCorpus& corpus, Norm norm) {
    const size_t n = corpus.loads.size();
    std::vector<double> out;
    out.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            out.push_back(loads::load_distance(corpus.loads[i], corpus.loads[j], norm));
    return out;
}

CollisionCurve collision_curve(const std::vector<double>& load_dists,
                               const std::vector<HashValue>& hashes, double S) {
    const size_t n = hashes.size();
    const size_t num_pairs = n * (n - 1) / 2;
    if (load_dists.size() != num_pairs)
        throw std::invalid_argument("pair-distance count does not match the hash count");
    if (num_pairs < kBins)
        throw std::invalid_argument("collision curve needs at least five pairs");

    const auto rows = normalized_rows(hashes);

    // sort pair indices by input distance; index tiebreak keeps the order stable
    std::vector<size_t> order(num_pairs);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return load_dists[a] != load_dists[b] ? load_dists[a] < load_dists[b] : a < b;
    });

    // recover (i, j) from the flat pair index lazily
    std::vector<std::pair<int, int>> pair_of(num_pairs);
    {
        size_t p = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) pair_of[p++] = {static_cast<int>(i),
                                                              static_cast<int>(j)};
    }

    CollisionCurve curve;
    curve.S = S;
    const size_t base = num_pairs / kBins;
    const size_t remainder = num_pairs % kBins;
    size_t cursor = 0;
    for (int bin = 0; bin < kBins; ++bin) {
        const size_t count = base + (static_cast<size_t>(bin) < remainder ? 1 : 0);
        long collisions = 0;
        double dist_sum = 0.0;
        for (size_t t = 0; t < count; ++t) {
            const size_t p = order[cursor++];
            dist_sum += load_dists[p];
            const auto [i, j] = pair_of[p];
            bool collide = true;
            for (size_t d = 0; d < rows[i].size(); ++d)
                if (std::abs(rows[i][d] - rows[j][d]) >= S) { collide = false; break; }
            collisions += collide ? 1 : 0;
        }
        curve.bin_pair_counts[bin] = static_cast<long>(count);
        curve.bin_centers[bin] = dist_sum / static_cast<double>(count);
        curve.p_collision[bin] = static_cast<double>(collisions) / static_cast<double>(count);
    }
    return curve;
}

double spearman_rho(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("rank correlation needs equal-length vectors");
    const size_t n = a.size();
    if (n < 2) throw std::invalid_argument("rank correlation needs n >= 2");

    bool ties = false;
    const auto ra = average_ranks(a, ties);
    const auto rb = average_ranks(b, ties);

    if (!ties) {
        double sum_sq = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double d = ra[i] - rb[i];
            sum_sq += d * d;
        }
        const double nn = static_cast<double>(n);
        return 1.0 - 6.0 * sum_sq / (nn * (nn * nn - 1.0));
    }

    // Pearson on the average ranks
    const double mean = (static_cast<double>(n) + 1.0) / 2.0;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0)
        throw std::domain_error("rank correlation undefined for a constant vector");
    return cov / std::sqrt(var_a * var_b);
}

std::vector<int> knn_loo_predictions(const std::vector<std::vector<double>>& rows,
                                     const std::vector<int>& labels, int k, Norm metric) {
    const int n = static_cast<int>(rows.size());
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label count does not match the item count");
    if (k < 1 || k >= n)
        throw std::invalid_argument("k must satisfy 1 <= k < item count");

    std::vector<int> predictions(n);
    std::vector<std::pair<double, int>> dist(n - 1);
    for (int i = 0; i < n; ++i) {
        int cursor = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            dist[cursor++] = {row_distance(rows[i], rows[j], metric), j};
        }
        std::partial_sort(dist.begin(), dist.begin() + k, dist.end(),
                          [](const auto& a, const auto& b) {
                              return a.first != b.first ? a.first < b.first
                                                        : a.second < b.second;
                          });
        if (k == 1) {
            predictions[i] = labels[dist[0].second];
        } else {
            std::vector<int> votes(k);
            for (int t = 0; t < k; ++t) votes[t] = labels[dist[t].second];
            predictions[i] = beams::hard_vote(votes);
        }
    }
    return predictions;
}

double knn_loo_accuracy(const std::vector<HashValue>& hashes, const std::vector<int>& labels,
                        int k, Norm metric) {
    const auto rows = normalized_rows(hashes);
    const auto predictions = knn_loo_predictions(rows, labels, k, metric);
    long correct = 0;
    for (size_t i = 0; i < labels.size(); ++i)
        correct += predictions[i] == labels[i] ? 1 : 0;
    return static_cast<double>(correct) / static_cast<double>(labels.size());
}

double ensemble_loo_accuracy(const std::vector<std::vector<HashValue>>& member_hashes,
                             const std::vector<int>& labels) {
    if (member_hashes.empty())
        throw std::invalid_argument("ensemble accuracy needs at least one member");
    const size_t n = labels.size();
    std::vector<std::vector<int>> member_predictions;
    member_predictions.reserve(member_hashes.size());
    for (const auto& hashes : member_hashes) {
        if (hashes.size() != n)
            throw std::invalid_argument("member hash count does not match the label count");
        member_predictions.push_back(
            knn_loo_predictions(normalized_rows(hashes), labels, 1, Norm::Linf));
    }
    long correct = 0;
    std::vector<int> votes(member_hashes.size());
    for (size_t i = 0; i < n; ++i) {
        for (size_t mbr = 0; mbr < member_predictions.size(); ++mbr)
            votes[mbr] = member_predictions[mbr][i];
        correct += beams::hard_vote(votes) == labels[i] ? 1 : 0;
    }
    return static_cast<double>(correct) / static_cast<double>(n);
}

std::vector<std::vector<int>> confusion_matrix(const std::vector<int>& predictions,
                                               const std::vector<int>& labels,
                                               int num_classes) {
    if (predictions.size() != labels.size())
        throw std::invalid_argument("prediction and label counts differ");
    std::vector<std::vector<int>> matrix(num_classes, std::vector<int>(num_classes, 0));
    for (size_t i = 0; i < labels.size(); ++i) {
        const int row = labels[i] - 1;
        const int col = predictions[i] - 1;
        if (row < 0 || row >= num_classes || col < 0 || col >= num_classes)
            throw std::invalid_argument("class label outside [1, num_classes]");
        ++matrix[row][col];
    }
    return matrix;
}

} // namespace mechlsh::metrics
