#include "clucmp/contingency.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace clucmp {

namespace {

// Sorts cells by (row, col) and rewrites per-point cell indices to match.
void canonicalize(std::vector<ContingencyTable::Cell>& cells, std::vector<int>& cell_of_point) {
    std::vector<int> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(cells[a].row, cells[a].col) < std::pair(cells[b].row, cells[b].col);
    });
    std::vector<ContingencyTable::Cell> sorted(cells.size());
    std::vector<int> new_index(cells.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        sorted[rank] = cells[order[rank]];
        new_index[order[rank]] = static_cast<int>(rank);
    }
    cells = std::move(sorted);
    for (int& idx : cell_of_point) {
        idx = new_index[idx];
    }
}

}  // namespace

ContingencyTable contingency(const Clustering& left, const Clustering& right) {
    if (left.n() != right.n()) {
        throw DimensionError("contingency: clusterings have different n");
    }
    const int n = left.n();
    const auto& llab = left.canonical_labels();
    const auto& rlab = right.canonical_labels();
    const std::int64_t kl = left.size();
    const std::int64_t kr = right.size();

    std::vector<ContingencyTable::Cell> cells;
    std::vector<int> cell_of_point(n);

    // Dense pair lookup when the label grid is small relative to n, hash map
    // otherwise. Both are one pass over the points.
    if (kl * kr <= std::max<std::int64_t>(n, 1'000'000)) {
        std::vector<int> slot(static_cast<std::size_t>(kl * kr), 0);  // 0 = unseen, else cell index + 1
        for (int i = 0; i < n; ++i) {
            const std::size_t key = static_cast<std::size_t>(llab[i]) * kr + rlab[i];
            if (slot[key] == 0) {
                cells.push_back({llab[i], rlab[i], 0});
                slot[key] = static_cast<int>(cells.size());
            }
            const int idx = slot[key] - 1;
            ++cells[idx].count;
            cell_of_point[i] = idx;
        }
    } else {
        std::unordered_map<std::uint64_t, int> slot;
        slot.reserve(static_cast<std::size_t>(n) * 2);
        for (int i = 0; i < n; ++i) {
            const std::uint64_t key =
                (static_cast<std::uint64_t>(llab[i]) << 32) | static_cast<std::uint32_t>(rlab[i]);
            auto [it, inserted] = slot.emplace(key, static_cast<int>(cells.size()));
            if (inserted) {
                cells.push_back({llab[i], rlab[i], 0});
            }
            ++cells[it->second].count;
            cell_of_point[i] = it->second;
        }
    }

    canonicalize(cells, cell_of_point);

    std::vector<int> row_sizes(left.size());
    for (int r = 0; r < left.size(); ++r) {
        row_sizes[r] = left.cluster_size(r);
    }
    std::vector<int> col_sizes(right.size());
    for (int c = 0; c < right.size(); ++c) {
        col_sizes[c] = right.cluster_size(c);
    }
    return ContingencyTable(n, std::move(row_sizes), std::move(col_sizes), std::move(cells),
                            std::move(cell_of_point));
}

}  // namespace clucmp
