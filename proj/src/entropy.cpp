#include "clucmp/entropy.hpp"

#include <cmath>

namespace clucmp {

double entropy_from_sizes(std::span<const int> sizes, std::int64_t total) {
    double h = 0.0;
    for (int s : sizes) {
        if (s > 0 && s < total) {
            const double p = static_cast<double>(s) / static_cast<double>(total);
            h -= p * std::log(p);
        }
    }
    return h;
}

double clustering_entropy(const Clustering& clustering) {
    double h = 0.0;
    const auto n = static_cast<double>(clustering.n());
    for (const auto& cluster : clustering.clusters()) {
        const double p = static_cast<double>(cluster.size()) / n;
        if (p < 1.0) {
            h -= p * std::log(p);
        }
    }
    return h;
}

EntropyStats entropy_stats(const ContingencyTable& table) {
    const auto n = static_cast<std::int64_t>(table.n());
    EntropyStats stats;
    stats.h_left = entropy_from_sizes(table.row_sizes(), n);
    stats.h_right = entropy_from_sizes(table.col_sizes(), n);
    std::vector<int> cell_counts;
    cell_counts.reserve(table.cells().size());
    for (const auto& cell : table.cells()) {
        cell_counts.push_back(cell.count);
    }
    stats.h_joint = entropy_from_sizes(cell_counts, n);
    stats.mutual_info = stats.h_left + stats.h_right - stats.h_joint;
    stats.h_left_given_right = stats.h_joint - stats.h_right;
    stats.h_right_given_left = stats.h_joint - stats.h_left;
    stats.vi = stats.h_left_given_right + stats.h_right_given_left;
    return stats;
}

EntropyStats entropy_stats(const Clustering& left, const Clustering& right) {
    return entropy_stats(contingency(left, right));
}

}  // namespace clucmp
