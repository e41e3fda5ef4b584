#include "clucmp/degradation.hpp"

#include <algorithm>

namespace clucmp {

std::optional<Clustering> binary_split_step(const Clustering& current) {
    int victim = -1;
    for (int c = 0; c < current.size(); ++c) {
        if (current.cluster_size(c) < 2) {
            continue;
        }
        if (victim == -1 || current.cluster_size(c) > current.cluster_size(victim) ||
            (current.cluster_size(c) == current.cluster_size(victim) &&
             current.cluster(c).front() < current.cluster(victim).front())) {
            victim = c;
        }
    }
    if (victim == -1) {
        return std::nullopt;  // already bottom
    }
    const auto& points = current.cluster(victim);
    const std::size_t first_half = (points.size() + 1) / 2;

    std::vector<int> labels = current.canonical_labels();
    const int new_label = current.size();
    for (std::size_t i = first_half; i < points.size(); ++i) {
        labels[points[i] - 1] = new_label;
    }
    return Clustering::from_labels(labels);
}

namespace {

std::vector<PointId> true_singletons(const Clustering& current, const Clustering& truth) {
    std::vector<PointId> out;
    for (const auto& cluster : truth.clusters()) {
        if (cluster.size() == 1) {
            const PointId p = cluster.front();
            if (current.cluster_size(current.label_of(p)) == 1) {
                out.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Clustering merge_clusters(const Clustering& current, int a, int b) {
    std::vector<int> labels = current.canonical_labels();
    for (int& label : labels) {
        if (label == b) {
            label = a;
        }
    }
    return Clustering::from_labels(labels);
}

}  // namespace

std::optional<Clustering> binary_merge_step(const Clustering& current, const Clustering& truth,
                                            std::mt19937_64& rng) {
    if (current.n() != truth.n()) {
        throw DimensionError("binary_merge_step: clusterings have different n");
    }
    const std::vector<PointId> singles = true_singletons(current, truth);
    if (singles.empty()) {
        return std::nullopt;
    }
    if (current.size() < 2) {
        return std::nullopt;  // n = 1: nothing to merge with
    }
    if (singles.size() >= 2) {
        return merge_clusters(current, current.label_of(singles[0]),
                              current.label_of(singles[1]));
    }
    const int own = current.label_of(singles[0]);
    std::uniform_int_distribution<int> pick(0, current.size() - 2);
    int partner = pick(rng);
    if (partner >= own) {
        ++partner;  // any cluster but its own, uniformly
    }
    return merge_clusters(current, own, partner);
}

DegradationSeries generate_series(const Clustering& truth, std::uint64_t seed) {
    DegradationSeries series{truth, {}, seed};
    std::mt19937_64 rng(seed);

    Clustering current = truth;
    while (auto next = binary_split_step(current)) {
        current = std::move(*next);
        series.steps.push_back({"split", current});
    }
    while (auto next = binary_merge_step(current, truth, rng)) {
        current = std::move(*next);
        series.steps.push_back({"merge", current});
    }
    return series;
}

}  // namespace clucmp
