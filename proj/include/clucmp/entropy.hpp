#pragma once

#include <span>

#include "clucmp/clustering.hpp"
#include "clucmp/contingency.hpp"

namespace clucmp {

/// Entropies of a clustering pair, all in nats.
struct EntropyStats {
    double h_left = 0.0;
    double h_right = 0.0;
    double h_joint = 0.0;
    double mutual_info = 0.0;
    double h_left_given_right = 0.0;
    double h_right_given_left = 0.0;
    double vi = 0.0;
};

/// -sum (s/total) ln(s/total) over the given cluster sizes (0 ln 0 = 0).
double entropy_from_sizes(std::span<const int> sizes, std::int64_t total);

double clustering_entropy(const Clustering& clustering);

EntropyStats entropy_stats(const ContingencyTable& table);
EntropyStats entropy_stats(const Clustering& left, const Clustering& right);

}  // namespace clucmp
