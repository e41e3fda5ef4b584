#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "clucmp/clustering.hpp"
#include "clucmp/features.hpp"

namespace clucmp::testing {

inline Clustering make(int n, const std::vector<std::vector<PointId>>& clusters) {
    return Clustering::from_clusters(n, clusters);
}

/// Chinese-restaurant-style random partition: variable cluster count with
/// skewed sizes.
inline Clustering random_clustering(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double theta = std::uniform_real_distribution<double>(0.3, 8.0)(rng);
    std::vector<int> labels(n);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || unif(rng) < theta / (theta + i)) {
            labels[i] = next++;
        } else {
            labels[i] = labels[std::uniform_int_distribution<int>(0, i - 1)(rng)];
        }
    }
    return Clustering::from_labels(labels);
}

inline FeatureMatrix random_features(int n, int d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    FeatureMatrix features(n, d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) {
            features(i, j) = normal(rng);
        }
    }
    return features;
}

/// Rows of `features` restricted to `points` (ascending), for reindexed
/// sub-clusterings.
inline FeatureMatrix feature_rows(const FeatureMatrix& features,
                                  const std::vector<PointId>& points) {
    FeatureMatrix sub(static_cast<Eigen::Index>(points.size()), features.cols());
    for (std::size_t i = 0; i < points.size(); ++i) {
        sub.row(static_cast<Eigen::Index>(i)) = features.row(points[i] - 1);
    }
    return sub;
}

/// True iff the clusterings contain an identical cluster.
inline bool share_any_cluster(const Clustering& a, const Clustering& b) {
    std::set<std::vector<PointId>> clusters(a.clusters().begin(), a.clusters().end());
    return std::any_of(b.clusters().begin(), b.clusters().end(),
                       [&](const auto& cluster) { return clusters.count(cluster) != 0; });
}

/// Independent connected-components oracle: breadth-first search over the
/// cluster bipartite graph, no union-find, no contingency table. Returns the
/// component point sets, each ascending, ordered by smallest point.
inline std::vector<std::vector<PointId>> bfs_component_points(const Clustering& left,
                                                              const Clustering& right) {
    const int kl = left.size();
    const int total = kl + right.size();
    std::vector<std::set<int>> adjacency(total);
    for (int i = 0; i < left.n(); ++i) {
        const int l = left.canonical_labels()[i];
        const int r = kl + right.canonical_labels()[i];
        adjacency[l].insert(r);
        adjacency[r].insert(l);
    }
    std::vector<int> component_of(total, -1);
    int count = 0;
    for (int start = 0; start < total; ++start) {
        if (component_of[start] != -1) {
            continue;
        }
        std::queue<int> frontier;
        frontier.push(start);
        component_of[start] = count;
        while (!frontier.empty()) {
            const int node = frontier.front();
            frontier.pop();
            for (int next : adjacency[node]) {
                if (component_of[next] == -1) {
                    component_of[next] = count;
                    frontier.push(next);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<PointId>> points(count);
    for (int i = 0; i < left.n(); ++i) {
        points[component_of[left.canonical_labels()[i]]].push_back(static_cast<PointId>(i + 1));
    }
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return points;
}

/// Exhaustive maximum-weight matching (rows may stay unmatched); for small
/// instances only (cols <= 30).
inline std::int64_t brute_force_matching(const std::vector<std::vector<std::int64_t>>& weights,
                                         std::size_t row = 0, std::uint32_t used = 0) {
    if (row == weights.size()) {
        return 0;
    }
    std::int64_t best = brute_force_matching(weights, row + 1, used);  // leave row unmatched
    for (std::size_t col = 0; col < weights[row].size(); ++col) {
        if ((used >> col) & 1u) {
            continue;
        }
        best = std::max(best, weights[row][col] +
                                  brute_force_matching(weights, row + 1, used | (1u << col)));
    }
    return best;
}

/// Pair-counting Rand oracle: iterates all point pairs.
inline double brute_force_rand(const Clustering& left, const Clustering& right) {
    const int n = left.n();
    std::int64_t agree = 0;
    std::int64_t pairs = 0;
    for (PointId a = 1; a <= n; ++a) {
        for (PointId b = a + 1; b <= n; ++b) {
            ++pairs;
            const bool together_left = left.label_of(a) == left.label_of(b);
            const bool together_right = right.label_of(a) == right.label_of(b);
            if (together_left == together_right) {
                ++agree;
            }
        }
    }
    return static_cast<double>(agree) / static_cast<double>(pairs);
}

/// Induced partition of `cluster` under `clustering`, via direct set
/// intersections (independent of the contingency machinery).
inline std::vector<std::vector<PointId>> oracle_induced_parts(
    const std::vector<PointId>& cluster, const Clustering& clustering) {
    std::vector<std::vector<PointId>> parts;
    const std::set<PointId> members(cluster.begin(), cluster.end());
    for (const auto& other : clustering.clusters()) {
        std::vector<PointId> part;
        for (PointId p : other) {
            if (members.count(p) != 0) {
                part.push_back(p);
            }
        }
        if (!part.empty()) {
            parts.push_back(std::move(part));
        }
    }
    return parts;
}

inline double oracle_size_entropy(const std::vector<std::vector<PointId>>& parts,
                                  std::size_t total) {
    double h = 0.0;
    for (const auto& part : parts) {
        const double p = static_cast<double>(part.size()) / static_cast<double>(total);
        if (p < 1.0) {
            h -= p * std::log(p);
        }
    }
    return h;
}

inline double oracle_s_entropy(const std::vector<PointId>& cluster,
                               const std::vector<std::vector<PointId>>& parts) {
    if (parts.size() == 1) {
        return 1.0;
    }
    if (parts.size() == cluster.size()) {
        return 0.0;
    }
    return 1.0 - oracle_size_entropy(parts, cluster.size()) /
                     std::log(static_cast<double>(cluster.size()));
}

/// Direct evaluation of the product-form split-merge similarity over the full
/// cluster grid, with induced partitions rebuilt from scratch per cell.
inline double oracle_s_star_entropy(const Clustering& left, const Clustering& right) {
    double total = 0.0;
    for (const auto& lc : left.clusters()) {
        const auto split_parts = oracle_induced_parts(lc, right);
        const double split_score = oracle_s_entropy(lc, split_parts);
        for (const auto& rc : right.clusters()) {
            std::vector<PointId> overlap;
            std::set_intersection(lc.begin(), lc.end(), rc.begin(), rc.end(),
                                  std::back_inserter(overlap));
            if (overlap.empty()) {
                continue;
            }
            const auto merge_parts = oracle_induced_parts(rc, left);
            const double merge_score = oracle_s_entropy(rc, merge_parts);
            total += static_cast<double>(overlap.size()) / left.n() * split_score * merge_score;
        }
    }
    return total;
}

}  // namespace clucmp::testing
