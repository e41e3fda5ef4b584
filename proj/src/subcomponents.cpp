#include "clucmp/subcomponents.hpp"

#include <algorithm>
#include <unordered_map>

namespace clucmp {

namespace {

// Groups `cluster` by membership in `parts`, preserving ascending point
// order inside each group; groups are ordered by smallest point id.
std::vector<std::vector<PointId>> group_by_membership(
    const std::vector<PointId>& cluster, const std::vector<std::vector<PointId>>& parts) {
    std::unordered_map<PointId, int> part_of;
    for (std::size_t idx = 0; idx < parts.size(); ++idx) {
        for (PointId p : parts[idx]) {
            part_of.emplace(p, static_cast<int>(idx));
        }
    }
    std::unordered_map<int, std::vector<PointId>> groups;
    for (PointId p : cluster) {
        groups[part_of.at(p)].push_back(p);
    }
    std::vector<std::vector<PointId>> out;
    out.reserve(groups.size());
    for (auto& [idx, points] : groups) {
        out.push_back(std::move(points));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

std::vector<SplitGraph> split_set(const Component& component) {
    std::vector<SplitGraph> out;
    out.reserve(component.left.size());
    for (const auto& cluster : component.left) {
        out.push_back({cluster, group_by_membership(cluster, component.right)});
    }
    return out;
}

std::vector<MergeGraph> merge_set(const Component& component) {
    std::vector<MergeGraph> out;
    out.reserve(component.right.size());
    for (const auto& cluster : component.right) {
        out.push_back({group_by_membership(cluster, component.left), cluster});
    }
    return out;
}

DerivationGraph derivation_graph(const Clustering& left, const Clustering& right) {
    const ContingencyTable table = contingency(left, right);
    const Clustering middle = meet(table);

    // Cell index -> canonical meet cluster index.
    std::vector<int> meet_label_of_cell(table.cells().size());
    const auto& cell_of_point = table.cell_of_point();
    for (int i = 0; i < table.n(); ++i) {
        meet_label_of_cell[cell_of_point[i]] = middle.canonical_labels()[i];
    }

    DerivationGraph graph{left, middle, right, {}, {}};
    graph.split_edges.reserve(table.cells().size());
    graph.merge_edges.reserve(table.cells().size());
    for (std::size_t c = 0; c < table.cells().size(); ++c) {
        graph.split_edges.emplace_back(table.cells()[c].row, meet_label_of_cell[c]);
        graph.merge_edges.emplace_back(meet_label_of_cell[c], table.cells()[c].col);
    }
    std::sort(graph.split_edges.begin(), graph.split_edges.end());
    std::sort(graph.merge_edges.begin(), graph.merge_edges.end());
    return graph;
}

std::vector<SubcomponentPair> subcomponent_pairs(const Clustering& left, const Clustering& right) {
    if (left.n() != right.n()) {
        throw DimensionError("subcomponent_pairs: clusterings have different n");
    }
    const ContingencyTable table = contingency(left, right);

    std::vector<std::vector<PointId>> cell_points(table.cells().size());
    for (std::size_t c = 0; c < table.cells().size(); ++c) {
        cell_points[c].reserve(table.cells()[c].count);
    }
    const auto& cell_of_point = table.cell_of_point();
    for (int i = 0; i < table.n(); ++i) {
        cell_points[cell_of_point[i]].push_back(static_cast<PointId>(i + 1));
    }

    // Row r's split graph partitions the left cluster r by the cells in that
    // row; dually for columns. Targets are in column order, sources in row
    // order.
    std::vector<SplitGraph> row_split(table.rows());
    for (int r = 0; r < table.rows(); ++r) {
        row_split[r].source = left.cluster(r);
    }
    std::vector<MergeGraph> col_merge(table.cols());
    for (int c = 0; c < table.cols(); ++c) {
        col_merge[c].target = right.cluster(c);
    }
    for (std::size_t c = 0; c < table.cells().size(); ++c) {
        row_split[table.cells()[c].row].targets.push_back(cell_points[c]);
        col_merge[table.cells()[c].col].sources.push_back(cell_points[c]);
    }

    std::vector<SubcomponentPair> pairs;
    pairs.reserve(table.cells().size());
    for (std::size_t c = 0; c < table.cells().size(); ++c) {
        pairs.push_back({std::move(cell_points[c]), row_split[table.cells()[c].row],
                         col_merge[table.cells()[c].col]});
    }
    return pairs;
}

}  // namespace clucmp
