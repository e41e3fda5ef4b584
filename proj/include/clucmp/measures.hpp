#pragma once

#include <string>
#include <vector>

#include "clucmp/clustering.hpp"
#include "clucmp/entropy.hpp"

namespace clucmp {

/// A measure evaluation. `normalized` records whether the measure's range is
/// the full [0, 1]; `flags` carries warnings and applied conventions (empty
/// in the common case).
struct MeasureScore {
    double value = 0.0;
    std::string measure_id;
    bool normalized = false;
    std::vector<std::string> flags;
};

/// Fraction of point pairs the two clusterings agree on. Undefined for n < 2.
MeasureScore rand_index(const Clustering& left, const Clustering& right);

/// Similarity form of the van Dongen point-move criterion:
/// (sum of row maxima + sum of column maxima) / 2n.
MeasureScore van_dongen(const Clustering& left, const Clustering& right);

/// Best one-to-one cluster matching weight over n (exact assignment solve).
MeasureScore accuracy(const Clustering& left, const Clustering& right);

/// Mutual information normalized by max(H(left), H(right)); the degenerate
/// 0/0 case scores 1 iff the clusterings are equal (flagged).
MeasureScore nmi(const Clustering& left, const Clustering& right);

/// 1 - VI / ln n; returns 1 by convention for n = 1.
MeasureScore v_similarity(const Clustering& left, const Clustering& right);

/// 1 - VI / ln k^2 for clusterings with at most k clusters each; flags when
/// k exceeds sqrt(n).
MeasureScore k_measure(const Clustering& left, const Clustering& right, int k);

}  // namespace clucmp
