#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clucmp/lattice.hpp"

namespace clucmp {

struct ComponentScore {
    std::vector<PointId> join_cluster;
    double weight = 0.0;
    double score = 0.0;
};

/// A measure value rebuilt from per-component scores: the weighted component
/// sum plus a component-independent offset must reproduce the direct value.
struct DecompositionReport {
    std::string measure_id;
    std::vector<ComponentScore> components;
    double offset = 0.0;
    double recomposed = 0.0;
    double direct = 0.0;

    double residual() const;
};

/// Measure ids with a component decomposition: rand, mi, v, vandongen,
/// accuracy, k, sh. NMI has none.
bool is_decomposable_measure(const std::string& measure_id);

DecompositionReport decompose(const std::string& measure_id, const Clustering& left,
                              const Clustering& right, std::optional<int> k = std::nullopt);

struct RecompositionCheck {
    bool pass = false;
    double residual = 0.0;
};

RecompositionCheck verify_recomposition(const std::string& measure_id, const Clustering& left,
                                        const Clustering& right, double tolerance,
                                        std::optional<int> k = std::nullopt);

}  // namespace clucmp
