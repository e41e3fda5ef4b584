#include "clucmp/decomposition.hpp"

#include <array>
#include <cmath>

#include "clucmp/evaluate.hpp"

namespace clucmp {

namespace {

constexpr std::array<const char*, 7> kDecomposable = {"rand",     "mi", "v", "vandongen",
                                                      "accuracy", "k",  "sh"};

}  // namespace

double DecompositionReport::residual() const { return std::abs(recomposed - direct); }

bool is_decomposable_measure(const std::string& measure_id) {
    for (const char* id : kDecomposable) {
        if (measure_id == id) {
            return true;
        }
    }
    return false;
}

DecompositionReport decompose(const std::string& measure_id, const Clustering& left,
                              const Clustering& right, std::optional<int> k) {
    if (measure_id == "nmi") {
        throw UnsupportedDecompositionError("nmi has no component decomposition");
    }
    if (!is_decomposable_measure(measure_id)) {
        throw UnsupportedDecompositionError("measure '" + measure_id +
                                            "' has no component decomposition");
    }
    if (measure_id == "k" && !k.has_value()) {
        throw PreconditionError("decompose: measure 'k' needs a cluster bound k");
    }

    DecompositionReport report;
    report.measure_id = measure_id;
    report.direct = evaluate_measure(measure_id, left, right, k).value;

    const auto n = static_cast<double>(left.n());
    double weight_sum = 0.0;
    for (const Component& component : components(left, right)) {
        ComponentScore entry;
        entry.join_cluster = component.join_cluster;
        const auto j = static_cast<double>(component.join_cluster.size());

        if (measure_id == "rand") {
            entry.weight = j * (j - 1.0) / (n * (n - 1.0));
        } else if (measure_id == "v") {
            // j log j vanishes for single-point components; avoid 0/0 at n=1.
            entry.weight = left.n() > 1 ? j * std::log(j) / (n * std::log(n)) : 0.0;
        } else {
            entry.weight = j / n;
        }

        if (component.join_cluster.size() == 1) {
            // Both induced clusterings are the unique one-point partition.
            entry.score = measure_id == "mi" ? 0.0 : 1.0;
        } else {
            const Clustering left_j = reindex_partition(component.left);
            const Clustering right_j = reindex_partition(component.right);
            entry.score = evaluate_measure(measure_id, left_j, right_j, k).value;
        }
        weight_sum += entry.weight;
        report.components.push_back(std::move(entry));
    }

    if (measure_id == "rand" || measure_id == "v") {
        report.offset = 1.0 - weight_sum;
    } else if (measure_id == "mi") {
        double size_log_sum = 0.0;
        for (const ComponentScore& entry : report.components) {
            const auto j = static_cast<double>(entry.join_cluster.size());
            size_log_sum += j / n * std::log(j);
        }
        report.offset = std::log(n) - size_log_sum;
    } else {
        report.offset = 0.0;  // join-weighted: vandongen, accuracy, k, sh
    }

    report.recomposed = report.offset;
    for (const ComponentScore& entry : report.components) {
        report.recomposed += entry.weight * entry.score;
    }
    return report;
}

RecompositionCheck verify_recomposition(const std::string& measure_id, const Clustering& left,
                                        const Clustering& right, double tolerance,
                                        std::optional<int> k) {
    const DecompositionReport report = decompose(measure_id, left, right, k);
    return {report.residual() <= tolerance, report.residual()};
}

}  // namespace clucmp
