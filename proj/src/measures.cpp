#include "clucmp/measures.hpp"

#include <algorithm>
#include <cmath>

#include "clucmp/assignment.hpp"
#include "clucmp/contingency.hpp"

namespace clucmp {

namespace {

std::int64_t pairs_of(std::int64_t count) { return count * (count - 1) / 2; }

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

MeasureScore rand_index(const Clustering& left, const Clustering& right) {
    if (left.n() != right.n()) {
        throw DimensionError("rand_index: clusterings have different n");
    }
    if (left.n() < 2) {
        throw UndefinedMeasureError("rand_index: undefined for n < 2 (no point pairs)");
    }
    const ContingencyTable table = contingency(left, right);
    std::int64_t within_left = 0;
    for (int s : table.row_sizes()) {
        within_left += pairs_of(s);
    }
    std::int64_t within_right = 0;
    for (int s : table.col_sizes()) {
        within_right += pairs_of(s);
    }
    std::int64_t within_both = 0;
    for (const auto& cell : table.cells()) {
        within_both += pairs_of(cell.count);
    }
    const std::int64_t all_pairs = pairs_of(left.n());
    const std::int64_t agreements = all_pairs - within_left - within_right + 2 * within_both;
    return {static_cast<double>(agreements) / static_cast<double>(all_pairs), "rand", true, {}};
}

MeasureScore van_dongen(const Clustering& left, const Clustering& right) {
    const ContingencyTable table = contingency(left, right);
    std::vector<int> row_max(table.rows(), 0), col_max(table.cols(), 0);
    for (const auto& cell : table.cells()) {
        row_max[cell.row] = std::max(row_max[cell.row], cell.count);
        col_max[cell.col] = std::max(col_max[cell.col], cell.count);
    }
    std::int64_t total = 0;
    for (int m : row_max) {
        total += m;
    }
    for (int m : col_max) {
        total += m;
    }
    return {static_cast<double>(total) / (2.0 * table.n()), "vandongen", false, {}};
}

MeasureScore accuracy(const Clustering& left, const Clustering& right) {
    const ContingencyTable table = contingency(left, right);
    std::vector<std::vector<std::int64_t>> weights(
        table.rows(), std::vector<std::int64_t>(table.cols(), 0));
    for (const auto& cell : table.cells()) {
        weights[cell.row][cell.col] = cell.count;
    }
    const std::int64_t best = max_weight_assignment(weights);
    return {static_cast<double>(best) / static_cast<double>(table.n()), "accuracy", false, {}};
}

MeasureScore nmi(const Clustering& left, const Clustering& right) {
    const EntropyStats stats = entropy_stats(left, right);
    const double h_max = std::max(stats.h_left, stats.h_right);
    if (h_max == 0.0) {
        // Both clusterings are the one-cluster partition.
        return {left == right ? 1.0 : 0.0, "nmi", true, {"0/0-convention"}};
    }
    return {clamp01(stats.mutual_info / h_max), "nmi", true, {}};
}

MeasureScore v_similarity(const Clustering& left, const Clustering& right) {
    if (left.n() != right.n()) {
        throw DimensionError("v_similarity: clusterings have different n");
    }
    if (left.n() == 1) {
        return {1.0, "v", true, {"n=1-convention"}};
    }
    const EntropyStats stats = entropy_stats(left, right);
    return {clamp01(1.0 - stats.vi / std::log(static_cast<double>(left.n()))), "v", true, {}};
}

MeasureScore k_measure(const Clustering& left, const Clustering& right, int k) {
    if (left.n() != right.n()) {
        throw DimensionError("k_measure: clusterings have different n");
    }
    if (k < 2) {
        throw PreconditionError("k_measure: k must be at least 2");
    }
    if (left.size() > k || right.size() > k) {
        throw PreconditionError("k_measure: a clustering has more than k clusters");
    }
    MeasureScore score;
    score.measure_id = "k";
    score.normalized = true;
    const EntropyStats stats = entropy_stats(left, right);
    score.value = clamp01(1.0 - stats.vi / (2.0 * std::log(static_cast<double>(k))));
    if (static_cast<std::int64_t>(k) * k > left.n()) {
        score.flags.push_back("k>sqrt(n)");
    }
    return score;
}

}  // namespace clucmp
