#pragma once

#include <Eigen/Core>

#include "clucmp/error.hpp"

namespace clucmp {

/// Per-point feature vectors: row i holds the features of point i+1.
using FeatureMatrix = Eigen::MatrixXd;

/// Checks that the matrix covers n points, has at least one column, and is
/// finite everywhere.
void validate_features(const FeatureMatrix& features, int n);

}  // namespace clucmp
