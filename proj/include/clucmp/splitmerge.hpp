#pragma once

#include <functional>
#include <string>
#include <vector>

#include "clucmp/clustering.hpp"
#include "clucmp/features.hpp"
#include "clucmp/measures.hpp"

namespace clucmp {

/// Scores how well a partition of a cluster keeps the cluster together:
/// 1 iff the partition is the whole cluster, 0 iff it is all singletons of a
/// non-singleton cluster, strictly inside (0,1) otherwise. The "mse" measure
/// deliberately relaxes the first two conditions (see s_mse).
struct SubcomponentMeasure {
    std::string id;
    bool needs_features = false;
    /// cluster: the scored cluster (ascending original point ids);
    /// parts: a partition of it; features: global matrix, or nullptr;
    /// notes: optional sink for applied-convention flags.
    std::function<double(const std::vector<PointId>& cluster,
                         const std::vector<std::vector<PointId>>& parts,
                         const FeatureMatrix* features, std::vector<std::string>* notes)>
        evaluate;
};

/// 1 - H(parts)/ln|cluster|. Singleton clusters and one-part partitions
/// score exactly 1; all-singleton partitions of a larger cluster exactly 0.
double s_entropy(const std::vector<PointId>& cluster,
                 const std::vector<std::vector<PointId>>& parts);

/// (largest part size)/|cluster|, in (0, 1]. Violates the all-singletons
/// condition by design; kept to realize the van Dongen instance of S'.
double s_max(const std::vector<PointId>& cluster,
             const std::vector<std::vector<PointId>>& parts);

/// Within-part sum of squared deviations over the whole-cluster sum. Falls
/// back to s_entropy when the whole cluster has zero variance but is split
/// (reported through `notes`).
double s_mse(const std::vector<PointId>& cluster, const std::vector<std::vector<PointId>>& parts,
             const FeatureMatrix& features, std::vector<std::string>* notes = nullptr);

/// Built-in or registered measure by id ("entropy", "max", "mse", ...).
const SubcomponentMeasure& subcomponent_measure(const std::string& id);

bool has_subcomponent_measure(const std::string& id);

/// Registers a custom measure and screens it against the normalization
/// conditions on all partitions of up to 6 points. The returned warnings are
/// advisory; the measure is registered either way. Not thread-safe: register
/// everything before evaluating in parallel.
std::vector<std::string> register_subcomponent_measure(SubcomponentMeasure measure);

/// Product-form split-merge similarity: the meet-weighted sum over nonempty
/// intersections of s(right|L) * s(left|C).
MeasureScore s_star(const Clustering& left, const Clustering& right,
                    const SubcomponentMeasure& split_measure,
                    const SubcomponentMeasure& merge_measure,
                    const FeatureMatrix* features = nullptr);

/// Arithmetic-mean form: half the size-weighted split scores plus half the
/// size-weighted merge scores.
MeasureScore s_prime(const Clustering& left, const Clustering& right,
                     const SubcomponentMeasure& split_measure,
                     const SubcomponentMeasure& merge_measure,
                     const FeatureMatrix* features = nullptr);

/// s_star with the entropy measure on both sides.
MeasureScore sh_measure(const Clustering& left, const Clustering& right);

/// s_star with the mean-squared-error measure on both sides.
MeasureScore smse_measure(const Clustering& left, const Clustering& right,
                          const FeatureMatrix& features);

}  // namespace clucmp
