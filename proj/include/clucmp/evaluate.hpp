#pragma once

#include <optional>
#include <string>

#include "clucmp/features.hpp"
#include "clucmp/measures.hpp"
#include "clucmp/splitmerge.hpp"

namespace clucmp {

/// Measure ids accepted by evaluate_measure: the CLI-facing set
/// ("rand", "vandongen", "accuracy", "nmi", "v", "k", "sh", "smse")
/// plus "mi", the raw mutual information used for decomposition checks.
bool is_known_measure_id(const std::string& id);

bool measure_requires_k(const std::string& id);

bool measure_requires_features(const std::string& id);

/// Evaluates a measure by id. `k` is consulted only by "k"; `features` only
/// by "smse".
MeasureScore evaluate_measure(const std::string& id, const Clustering& left,
                              const Clustering& right, std::optional<int> k = std::nullopt,
                              const FeatureMatrix* features = nullptr);

}  // namespace clucmp
