#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clucmp/clustering.hpp"

namespace clucmp {

/// A deterministic walk from the true clustering down to the all-singletons
/// partition (split phase) and on to a worst-clustering (merge phase).
struct DegradationStep {
    std::string op;  // "split" or "merge"
    Clustering clustering;
};

struct DegradationSeries {
    Clustering truth;
    std::vector<DegradationStep> steps;
    std::uint64_t seed = 0;
};

/// Splits the largest non-singleton cluster (ties broken by smallest point
/// id) into its first ceil(m/2) and last floor(m/2) points by ascending id.
/// Empty when no non-singleton cluster remains.
std::optional<Clustering> binary_split_step(const Clustering& current);

/// Merges the two smallest-id true singletons, or the only remaining true
/// singleton with a uniformly random other cluster. A true singleton is a
/// point that is a singleton cluster in `truth` and still a singleton in
/// `current`. Empty when none remain.
std::optional<Clustering> binary_merge_step(const Clustering& current, const Clustering& truth,
                                            std::mt19937_64& rng);

/// Split until bottom, then merge until exhausted. Deterministic in
/// (truth, seed).
DegradationSeries generate_series(const Clustering& truth, std::uint64_t seed);

}  // namespace clucmp
