#include "clucmp/features.hpp"

#include <string>

namespace clucmp {

void validate_features(const FeatureMatrix& features, int n) {
    if (features.rows() != n) {
        throw DimensionError("features: " + std::to_string(features.rows()) +
                             " rows for a clustering of " + std::to_string(n) + " points");
    }
    if (features.cols() < 1) {
        throw InvalidInputError("features: need at least one column");
    }
    if (!features.allFinite()) {
        throw InvalidInputError("features: non-finite entry");
    }
}

}  // namespace clucmp
