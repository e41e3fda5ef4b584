#include "clucmp/lattice.hpp"

#include <numeric>

namespace clucmp {

namespace {

class UnionFind {
public:
    explicit UnionFind(int size) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[b] = a;
        }
    }

private:
    std::vector<int> parent_;
};

// Per-point join labels: left cluster i and right cluster j share a
// union-find node set whenever some cell links them.
std::vector<int> join_labels(const ContingencyTable& table) {
    const int kl = table.rows();
    UnionFind uf(kl + table.cols());
    for (const auto& cell : table.cells()) {
        uf.unite(cell.row, kl + cell.col);
    }
    std::vector<int> root_of_row(kl);
    for (int r = 0; r < kl; ++r) {
        root_of_row[r] = uf.find(r);
    }
    std::vector<int> labels(table.n());
    const auto& cell_of_point = table.cell_of_point();
    const auto& cells = table.cells();
    for (int i = 0; i < table.n(); ++i) {
        labels[i] = root_of_row[cells[cell_of_point[i]].row];
    }
    return labels;
}

}  // namespace

Clustering meet(const ContingencyTable& table) {
    return Clustering::from_labels(table.cell_of_point());
}

Clustering meet(const Clustering& left, const Clustering& right) {
    return meet(contingency(left, right));
}

Clustering join(const ContingencyTable& table) {
    return Clustering::from_labels(join_labels(table));
}

Clustering join(const Clustering& left, const Clustering& right) {
    return join(contingency(left, right));
}

std::vector<Component> components(const Clustering& left, const Clustering& right) {
    const ContingencyTable table = contingency(left, right);
    const Clustering j = join(table);

    std::vector<Component> out(j.size());
    for (int c = 0; c < j.size(); ++c) {
        out[c].join_cluster = j.cluster(c);
    }
    // Every cluster of either side lies inside exactly one join cluster.
    for (const auto& cluster : left.clusters()) {
        out[j.label_of(cluster.front())].left.push_back(cluster);
    }
    for (const auto& cluster : right.clusters()) {
        out[j.label_of(cluster.front())].right.push_back(cluster);
    }
    return out;
}

}  // namespace clucmp
