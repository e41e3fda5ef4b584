#pragma once

#include <cstdint>
#include <vector>

#include "clucmp/clustering.hpp"

namespace clucmp {

/// Sparse cross-tabulation of two clusterings: one cell per nonempty
/// intersection. The cells are exactly the clusters of the meet, and
/// cell_of_point records which cell each point fell into, so the meet and
/// every meet-weighted sum can be read off without another pass.
class ContingencyTable {
public:
    struct Cell {
        int row;    // cluster index in the left clustering
        int col;    // cluster index in the right clustering
        int count;  // |L ∩ C| >= 1
    };

    ContingencyTable(int n, std::vector<int> row_sizes, std::vector<int> col_sizes,
                     std::vector<Cell> cells, std::vector<int> cell_of_point)
        : n_(n),
          row_sizes_(std::move(row_sizes)),
          col_sizes_(std::move(col_sizes)),
          cells_(std::move(cells)),
          cell_of_point_(std::move(cell_of_point)) {}

    int n() const { return n_; }
    int rows() const { return static_cast<int>(row_sizes_.size()); }
    int cols() const { return static_cast<int>(col_sizes_.size()); }

    const std::vector<int>& row_sizes() const { return row_sizes_; }
    const std::vector<int>& col_sizes() const { return col_sizes_; }

    /// Nonempty cells in ascending (row, col) order.
    const std::vector<Cell>& cells() const { return cells_; }

    /// Index i holds the cell index of point i+1.
    const std::vector<int>& cell_of_point() const { return cell_of_point_; }

private:
    int n_;
    std::vector<int> row_sizes_;
    std::vector<int> col_sizes_;
    std::vector<Cell> cells_;
    std::vector<int> cell_of_point_;
};

/// Single pass over the points with an associative lookup on the label pair;
/// linear time up to the lookup.
ContingencyTable contingency(const Clustering& left, const Clustering& right);

}  // namespace clucmp
