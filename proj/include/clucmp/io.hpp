#pragma once

#include <iosfwd>
#include <string>

#include "clucmp/clustering.hpp"
#include "clucmp/features.hpp"

namespace clucmp {

/// Reads a clustering from a text file. Two layouts are auto-detected by
/// column count: one token per line (line i = cluster label of point i), or
/// `point_id<whitespace>label` with point ids mapped 1..n in first-appearance
/// order. Blank lines and lines starting with '#' are ignored.
Clustering parse_clustering_file(const std::string& path);
Clustering parse_clustering(std::istream& in, const std::string& origin);

/// Writes the two-column layout: point id (p1..pn) and canonical cluster
/// label (c0, c1, ...).
void write_clustering_pairs(const Clustering& clustering, std::ostream& out);

/// Reads comma-separated numeric rows, row i = features of point i. A
/// non-numeric first line is treated as a header. All entries must be finite.
FeatureMatrix parse_features_file(const std::string& path);
FeatureMatrix parse_features(std::istream& in, const std::string& origin);

}  // namespace clucmp
