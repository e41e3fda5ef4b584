#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "clucmp/error.hpp"

namespace clucmp {

/// Points are dense 1-based ids; external identifiers are mapped at the I/O
/// boundary.
using PointId = std::int32_t;

/// A hard partition of the points {1..n} into disjoint nonempty clusters.
///
/// The representation is canonical: cluster indices are assigned in order of
/// first appearance when scanning points 1..n, every cluster's point list is
/// ascending, and clusters are ordered by their smallest point. Two
/// clusterings compare equal iff they induce the same partition, regardless
/// of the labels they were built from.
class Clustering {
public:
    Clustering() = default;

    /// Builds from per-point cluster labels (any hashable label type).
    template <typename Label>
    static Clustering from_labels(const std::vector<Label>& labels) {
        if (labels.empty()) {
            throw InvalidInputError("from_labels: empty label sequence");
        }
        std::vector<int> canonical(labels.size());
        std::unordered_map<Label, int> seen;
        seen.reserve(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            auto [it, inserted] = seen.emplace(labels[i], static_cast<int>(seen.size()));
            canonical[i] = it->second;
        }
        return Clustering(std::move(canonical), static_cast<int>(seen.size()));
    }

    /// Builds from explicit clusters; validates that they partition {1..n}.
    static Clustering from_clusters(int n, const std::vector<std::vector<PointId>>& clusters);

    int n() const { return n_; }

    /// Number of clusters.
    int size() const { return static_cast<int>(clusters_.size()); }

    /// Per-point cluster index in first-appearance order (index i = point i+1).
    const std::vector<int>& canonical_labels() const { return labels_; }

    const std::vector<std::vector<PointId>>& clusters() const { return clusters_; }

    const std::vector<PointId>& cluster(int index) const { return clusters_[index]; }

    int cluster_size(int index) const { return static_cast<int>(clusters_[index].size()); }

    /// Cluster index of a point (1-based point id).
    int label_of(PointId point) const { return labels_[point - 1]; }

    bool operator==(const Clustering& other) const { return labels_ == other.labels_; }
    bool operator!=(const Clustering& other) const { return !(*this == other); }

private:
    Clustering(std::vector<int> canonical, int num_clusters);

    int n_ = 0;
    std::vector<int> labels_;
    std::vector<std::vector<PointId>> clusters_;
};

/// The one-cluster partition of {1..n}.
Clustering top(int n);

/// The all-singletons partition of {1..n}.
Clustering bottom(int n);

/// True iff every cluster of `fine` is contained in a cluster of `coarse`.
bool refines(const Clustering& fine, const Clustering& coarse);

/// Restriction of a clustering to a nonempty subset of its points, with the
/// subset reindexed 1..|subset| in ascending order of original id.
Clustering induced(const Clustering& clustering, std::vector<PointId> subset);

/// Reindexes a partition given in original point ids to a Clustering over
/// 1..m, m being the total number of points; the mapping is ascending by
/// original id.
Clustering reindex_partition(const std::vector<std::vector<PointId>>& parts);

/// Largest n accepted by enumerate_clusterings (Bell(10) = 115975).
inline constexpr int kEnumerationCap = 10;

/// All set partitions of {1..n} in lexicographic restricted-growth-string
/// order. Refuses n above the cap.
std::vector<Clustering> enumerate_clusterings(int n);

/// Streaming form of the exhaustive enumeration.
void for_each_clustering(int n, const std::function<void(const Clustering&)>& fn);

}  // namespace clucmp
