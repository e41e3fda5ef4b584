#include "clucmp/clustering.hpp"

#include <algorithm>
#include <string>

namespace clucmp {

Clustering::Clustering(std::vector<int> canonical, int num_clusters)
    : n_(static_cast<int>(canonical.size())), labels_(std::move(canonical)) {
    std::vector<int> sizes(num_clusters, 0);
    for (int label : labels_) {
        ++sizes[label];
    }
    clusters_.resize(num_clusters);
    for (int c = 0; c < num_clusters; ++c) {
        clusters_[c].reserve(sizes[c]);
    }
    for (int i = 0; i < n_; ++i) {
        clusters_[labels_[i]].push_back(static_cast<PointId>(i + 1));
    }
}

Clustering Clustering::from_clusters(int n, const std::vector<std::vector<PointId>>& clusters) {
    if (n <= 0) {
        throw InvalidInputError("from_clusters: n must be positive");
    }
    std::vector<int> labels(n, -1);
    int next = 0;
    for (const auto& cluster : clusters) {
        if (cluster.empty()) {
            throw InvalidInputError("from_clusters: empty cluster");
        }
        for (PointId p : cluster) {
            if (p < 1 || p > n) {
                throw InvalidInputError("from_clusters: point id " + std::to_string(p) +
                                        " outside 1.." + std::to_string(n));
            }
            if (labels[p - 1] != -1) {
                throw InvalidInputError("from_clusters: point id " + std::to_string(p) +
                                        " appears in two clusters");
            }
            labels[p - 1] = next;
        }
        ++next;
    }
    for (int i = 0; i < n; ++i) {
        if (labels[i] == -1) {
            throw InvalidInputError("from_clusters: point id " + std::to_string(i + 1) +
                                    " not covered");
        }
    }
    return from_labels(labels);
}

Clustering top(int n) {
    if (n <= 0) {
        throw InvalidInputError("top: n must be positive");
    }
    return Clustering::from_labels(std::vector<int>(n, 0));
}

Clustering bottom(int n) {
    if (n <= 0) {
        throw InvalidInputError("bottom: n must be positive");
    }
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = i;
    }
    return Clustering::from_labels(labels);
}

bool refines(const Clustering& fine, const Clustering& coarse) {
    if (fine.n() != coarse.n()) {
        throw DimensionError("refines: clusterings have different n");
    }
    for (const auto& cluster : fine.clusters()) {
        const int parent = coarse.label_of(cluster.front());
        for (PointId p : cluster) {
            if (coarse.label_of(p) != parent) {
                return false;
            }
        }
    }
    return true;
}

Clustering induced(const Clustering& clustering, std::vector<PointId> subset) {
    if (subset.empty()) {
        throw InvalidInputError("induced: empty subset");
    }
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
        throw InvalidInputError("induced: duplicate point id in subset");
    }
    if (subset.front() < 1 || subset.back() > clustering.n()) {
        throw InvalidInputError("induced: point id outside 1..n");
    }
    std::vector<int> labels;
    labels.reserve(subset.size());
    for (PointId p : subset) {
        labels.push_back(clustering.label_of(p));
    }
    return Clustering::from_labels(labels);
}

Clustering reindex_partition(const std::vector<std::vector<PointId>>& parts) {
    std::vector<PointId> points;
    for (const auto& part : parts) {
        points.insert(points.end(), part.begin(), part.end());
    }
    if (points.empty()) {
        throw InvalidInputError("reindex_partition: empty partition");
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
        throw InvalidInputError("reindex_partition: duplicate point id");
    }
    std::unordered_map<PointId, int> rank;
    rank.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        rank.emplace(points[i], static_cast<int>(i));
    }
    std::vector<int> labels(points.size());
    int next = 0;
    for (const auto& part : parts) {
        for (PointId p : part) {
            labels[rank.at(p)] = next;
        }
        ++next;
    }
    return Clustering::from_labels(labels);
}

void for_each_clustering(int n, const std::function<void(const Clustering&)>& fn) {
    if (n < 1) {
        throw InvalidInputError("for_each_clustering: n must be positive");
    }
    if (n > kEnumerationCap) {
        throw PreconditionError("for_each_clustering: n exceeds enumeration cap " +
                                std::to_string(kEnumerationCap));
    }
    // Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]),
    // advanced in lexicographic order.
    std::vector<int> rgs(n, 0);
    std::vector<int> prefix_max(n, 0);
    while (true) {
        fn(Clustering::from_labels(rgs));
        int i = n - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<Clustering> enumerate_clusterings(int n) {
    std::vector<Clustering> out;
    for_each_clustering(n, [&](const Clustering& c) { out.push_back(c); });
    return out;
}

}  // namespace clucmp
