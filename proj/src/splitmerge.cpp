#include "clucmp/splitmerge.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "clucmp/contingency.hpp"
#include "clucmp/entropy.hpp"

namespace clucmp {

namespace {

void check_partition(const std::vector<PointId>& cluster,
                     const std::vector<std::vector<PointId>>& parts, const char* who) {
    std::vector<PointId> merged;
    merged.reserve(cluster.size());
    for (const auto& part : parts) {
        if (part.empty()) {
            throw InvalidInputError(std::string(who) + ": empty part");
        }
        merged.insert(merged.end(), part.begin(), part.end());
    }
    std::vector<PointId> sorted_cluster = cluster;
    std::sort(sorted_cluster.begin(), sorted_cluster.end());
    std::sort(merged.begin(), merged.end());
    if (merged != sorted_cluster) {
        throw InvalidInputError(std::string(who) + ": parts do not partition the cluster");
    }
}

bool all_singletons(const std::vector<std::vector<PointId>>& parts) {
    return std::all_of(parts.begin(), parts.end(),
                       [](const auto& part) { return part.size() == 1; });
}

double part_size_entropy(const std::vector<std::vector<PointId>>& parts, std::int64_t total) {
    std::vector<int> sizes;
    sizes.reserve(parts.size());
    for (const auto& part : parts) {
        sizes.push_back(static_cast<int>(part.size()));
    }
    return entropy_from_sizes(sizes, total);
}

double squared_deviation_sum(const std::vector<PointId>& points, const FeatureMatrix& features) {
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(features.cols());
    for (PointId p : points) {
        mean += features.row(p - 1);
    }
    mean /= static_cast<double>(points.size());
    double sse = 0.0;
    for (PointId p : points) {
        sse += (features.row(p - 1) - mean).squaredNorm();
    }
    return sse;
}

}  // namespace

double s_entropy(const std::vector<PointId>& cluster,
                 const std::vector<std::vector<PointId>>& parts) {
    check_partition(cluster, parts, "s_entropy");
    if (parts.size() == 1) {
        return 1.0;  // includes singleton clusters, where ln|A| = 0
    }
    if (all_singletons(parts)) {
        return 0.0;
    }
    const auto total = static_cast<std::int64_t>(cluster.size());
    return 1.0 - part_size_entropy(parts, total) / std::log(static_cast<double>(total));
}

double s_max(const std::vector<PointId>& cluster, const std::vector<std::vector<PointId>>& parts) {
    check_partition(cluster, parts, "s_max");
    std::size_t largest = 0;
    for (const auto& part : parts) {
        largest = std::max(largest, part.size());
    }
    return static_cast<double>(largest) / static_cast<double>(cluster.size());
}

double s_mse(const std::vector<PointId>& cluster, const std::vector<std::vector<PointId>>& parts,
             const FeatureMatrix& features, std::vector<std::string>* notes) {
    check_partition(cluster, parts, "s_mse");
    for (PointId p : cluster) {
        if (p < 1 || p > features.rows()) {
            throw DimensionError("s_mse: point " + std::to_string(p) +
                                 " has no feature row");
        }
    }
    if (parts.size() == 1) {
        return 1.0;
    }
    const double whole = squared_deviation_sum(cluster, features);
    if (whole == 0.0) {
        // Coincident points carry no distance signal; fall back to the size
        // distribution.
        if (notes != nullptr) {
            notes->push_back("mse-entropy-fallback");
        }
        return s_entropy(cluster, parts);
    }
    double within = 0.0;
    for (const auto& part : parts) {
        within += squared_deviation_sum(part, features);
    }
    return std::clamp(within / whole, 0.0, 1.0);
}

namespace {

std::map<std::string, SubcomponentMeasure>& registry() {
    static std::map<std::string, SubcomponentMeasure> measures = [] {
        std::map<std::string, SubcomponentMeasure> m;
        m["entropy"] = {"entropy", false,
                        [](const std::vector<PointId>& cluster,
                           const std::vector<std::vector<PointId>>& parts, const FeatureMatrix*,
                           std::vector<std::string>*) { return s_entropy(cluster, parts); }};
        m["max"] = {"max", false,
                    [](const std::vector<PointId>& cluster,
                       const std::vector<std::vector<PointId>>& parts, const FeatureMatrix*,
                       std::vector<std::string>*) { return s_max(cluster, parts); }};
        m["mse"] = {"mse", true,
                    [](const std::vector<PointId>& cluster,
                       const std::vector<std::vector<PointId>>& parts,
                       const FeatureMatrix* features, std::vector<std::string>* notes) {
                        if (features == nullptr) {
                            throw InvalidInputError("mse subcomponent measure needs features");
                        }
                        return s_mse(cluster, parts, *features, notes);
                    }};
        return m;
    }();
    return measures;
}

// Screens a measure against the subcomponent-normalization conditions on
// every partition of m <= 6 points; size-m feature rows 1..m are supplied to
// feature-based measures.
std::vector<std::string> screen_measure(const SubcomponentMeasure& measure) {
    std::vector<std::string> warnings;
    for (int m = 1; m <= 6 && warnings.size() < 8; ++m) {
        std::vector<PointId> cluster(m);
        std::iota(cluster.begin(), cluster.end(), 1);
        FeatureMatrix features(m, 1);
        for (int i = 0; i < m; ++i) {
            features(i, 0) = static_cast<double>(i + 1);
        }
        for (const Clustering& partition : enumerate_clusterings(m)) {
            const double value =
                measure.evaluate(cluster, partition.clusters(),
                                 measure.needs_features ? &features : nullptr, nullptr);
            const bool whole = partition.size() == 1;
            const bool singletons = partition.size() == m && m > 1;
            std::string violation;
            if (whole && value != 1.0) {
                violation = "value != 1 on the one-part partition";
            } else if (singletons && value != 0.0) {
                violation = "value != 0 on the all-singletons partition";
            } else if (!whole && !singletons && (value <= 0.0 || value >= 1.0)) {
                violation = "value outside (0,1) on an intermediate partition";
            }
            if (!violation.empty()) {
                warnings.push_back(measure.id + ": " + violation + " at m=" + std::to_string(m));
                break;
            }
        }
    }
    return warnings;
}

}  // namespace

const SubcomponentMeasure& subcomponent_measure(const std::string& id) {
    auto it = registry().find(id);
    if (it == registry().end()) {
        throw InvalidInputError("unknown subcomponent measure '" + id + "'");
    }
    return it->second;
}

bool has_subcomponent_measure(const std::string& id) { return registry().count(id) != 0; }

std::vector<std::string> register_subcomponent_measure(SubcomponentMeasure measure) {
    std::vector<std::string> warnings = screen_measure(measure);
    registry()[measure.id] = std::move(measure);
    return warnings;
}

namespace {

struct SubcomponentScores {
    std::vector<double> split;  // one per left cluster
    std::vector<double> merge;  // one per right cluster
    ContingencyTable table;
    std::vector<std::string> notes;
};

// Evaluates every split and merge subcomponent once. Row r's induced
// partition is the meet cells in row r; dually for columns.
SubcomponentScores score_subcomponents(const Clustering& left, const Clustering& right,
                                       const SubcomponentMeasure& split_measure,
                                       const SubcomponentMeasure& merge_measure,
                                       const FeatureMatrix* features) {
    if (left.n() != right.n()) {
        throw DimensionError("split-merge: clusterings have different n");
    }
    if ((split_measure.needs_features || merge_measure.needs_features)) {
        if (features == nullptr) {
            throw InvalidInputError("split-merge: measure '" +
                                    (split_measure.needs_features ? split_measure.id
                                                                  : merge_measure.id) +
                                    "' needs a feature matrix");
        }
        validate_features(*features, left.n());
    }

    ContingencyTable table = contingency(left, right);
    std::vector<std::vector<PointId>> cell_points(table.cells().size());
    const auto& cell_of_point = table.cell_of_point();
    for (int i = 0; i < table.n(); ++i) {
        cell_points[cell_of_point[i]].push_back(static_cast<PointId>(i + 1));
    }

    std::vector<std::vector<std::vector<PointId>>> row_parts(table.rows());
    std::vector<std::vector<std::vector<PointId>>> col_parts(table.cols());
    for (std::size_t c = 0; c < table.cells().size(); ++c) {
        row_parts[table.cells()[c].row].push_back(cell_points[c]);
        col_parts[table.cells()[c].col].push_back(std::move(cell_points[c]));
    }

    SubcomponentScores scores{{}, {}, std::move(table), {}};
    scores.split.reserve(row_parts.size());
    for (std::size_t r = 0; r < row_parts.size(); ++r) {
        scores.split.push_back(split_measure.evaluate(left.cluster(static_cast<int>(r)),
                                                      row_parts[r], features, &scores.notes));
    }
    scores.merge.reserve(col_parts.size());
    for (std::size_t c = 0; c < col_parts.size(); ++c) {
        scores.merge.push_back(merge_measure.evaluate(right.cluster(static_cast<int>(c)),
                                                      col_parts[c], features, &scores.notes));
    }
    std::sort(scores.notes.begin(), scores.notes.end());
    scores.notes.erase(std::unique(scores.notes.begin(), scores.notes.end()),
                       scores.notes.end());
    return scores;
}

std::string star_id(const SubcomponentMeasure& split_measure,
                    const SubcomponentMeasure& merge_measure, const char* prefix) {
    if (split_measure.id == merge_measure.id) {
        return std::string(prefix) + ":" + split_measure.id;
    }
    return std::string(prefix) + ":" + split_measure.id + "/" + merge_measure.id;
}

}  // namespace

MeasureScore s_star(const Clustering& left, const Clustering& right,
                    const SubcomponentMeasure& split_measure,
                    const SubcomponentMeasure& merge_measure, const FeatureMatrix* features) {
    const SubcomponentScores scores =
        score_subcomponents(left, right, split_measure, merge_measure, features);
    double acc = 0.0;
    for (const auto& cell : scores.table.cells()) {
        acc += static_cast<double>(cell.count) * scores.split[cell.row] * scores.merge[cell.col];
    }
    return {acc / static_cast<double>(scores.table.n()),
            star_id(split_measure, merge_measure, "s*"), true, scores.notes};
}

MeasureScore s_prime(const Clustering& left, const Clustering& right,
                     const SubcomponentMeasure& split_measure,
                     const SubcomponentMeasure& merge_measure, const FeatureMatrix* features) {
    const SubcomponentScores scores =
        score_subcomponents(left, right, split_measure, merge_measure, features);
    double split_sum = 0.0;
    for (std::size_t r = 0; r < scores.split.size(); ++r) {
        split_sum += scores.table.row_sizes()[r] * scores.split[r];
    }
    double merge_sum = 0.0;
    for (std::size_t c = 0; c < scores.merge.size(); ++c) {
        merge_sum += scores.table.col_sizes()[c] * scores.merge[c];
    }
    const auto n = static_cast<double>(scores.table.n());
    return {0.5 * split_sum / n + 0.5 * merge_sum / n,
            star_id(split_measure, merge_measure, "s'"), false, scores.notes};
}

MeasureScore sh_measure(const Clustering& left, const Clustering& right) {
    MeasureScore score =
        s_star(left, right, subcomponent_measure("entropy"), subcomponent_measure("entropy"));
    score.measure_id = "sh";
    return score;
}

MeasureScore smse_measure(const Clustering& left, const Clustering& right,
                          const FeatureMatrix& features) {
    MeasureScore score = s_star(left, right, subcomponent_measure("mse"),
                                subcomponent_measure("mse"), &features);
    score.measure_id = "smse";
    return score;
}

}  // namespace clucmp
