#include <doctest.h>

#include <random>

#include "clucmp/contingency.hpp"
#include "clucmp/lattice.hpp"
#include "helpers.hpp"

using namespace clucmp;
using testing::bfs_component_points;
using testing::make;
using testing::random_clustering;

namespace {

const Clustering kLeft5 = make(5, {{1, 2, 3}, {4, 5}});
const Clustering kRight5 = make(5, {{1, 2}, {3, 4}, {5}});

}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("contingency enumerates the nonempty intersections") {
    const ContingencyTable table = contingency(kLeft5, kRight5);
    CHECK(table.n() == 5);
    CHECK(table.row_sizes() == std::vector<int>{3, 2});
    CHECK(table.col_sizes() == std::vector<int>{2, 2, 1});
    REQUIRE(table.cells().size() == 4);
    const auto& cells = table.cells();
    CHECK((cells[0].row == 0 && cells[0].col == 0 && cells[0].count == 2));
    CHECK((cells[1].row == 0 && cells[1].col == 1 && cells[1].count == 1));
    CHECK((cells[2].row == 1 && cells[2].col == 1 && cells[2].count == 1));
    CHECK((cells[3].row == 1 && cells[3].col == 2 && cells[3].count == 1));
}

TEST_CASE("contingency of a clustering with itself is diagonal") {
    const ContingencyTable table = contingency(kLeft5, kLeft5);
    REQUIRE(table.cells().size() == 2);
    for (const auto& cell : table.cells()) {
        CHECK(cell.row == cell.col);
        CHECK(cell.count == table.row_sizes()[cell.row]);
    }
}

TEST_CASE("contingency of top and bottom is n unit cells") {
    const ContingencyTable table = contingency(top(6), bottom(6));
    REQUIRE(table.cells().size() == 6);
    for (const auto& cell : table.cells()) {
        CHECK(cell.count == 1);
    }
}

TEST_CASE("contingency rejects mismatched n") {
    CHECK_THROWS_AS(contingency(top(4), top(5)), DimensionError);
}

TEST_CASE("contingency row and column sums") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 37;
        const Clustering left = random_clustering(n, rng);
        const Clustering right = random_clustering(n, rng);
        const ContingencyTable table = contingency(left, right);
        std::vector<int> row_sum(table.rows(), 0), col_sum(table.cols(), 0);
        int total = 0;
        for (const auto& cell : table.cells()) {
            CHECK(cell.count >= 1);
            row_sum[cell.row] += cell.count;
            col_sum[cell.col] += cell.count;
            total += cell.count;
        }
        CHECK(total == n);
        CHECK(row_sum == table.row_sizes());
        CHECK(col_sum == table.col_sizes());
        // swapping the arguments transposes the cells
        const ContingencyTable swapped = contingency(right, left);
        CHECK(swapped.row_sizes() == table.col_sizes());
        CHECK(swapped.col_sizes() == table.row_sizes());
        auto transposed = swapped.cells();
        for (auto& cell : transposed) {
            std::swap(cell.row, cell.col);
        }
        std::sort(transposed.begin(), transposed.end(), [](const auto& a, const auto& b) {
            return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        });
        REQUIRE(transposed.size() == table.cells().size());
        for (std::size_t i = 0; i < transposed.size(); ++i) {
            CHECK(transposed[i].row == table.cells()[i].row);
            CHECK(transposed[i].col == table.cells()[i].col);
            CHECK(transposed[i].count == table.cells()[i].count);
        }
    }
}

TEST_CASE("contingency hash-map path agrees with the dense path") {
    // kl * kr > max(n, 1e6) forces the hash path; compare against bottoms
    // whose structure is known.
    const int n = 2000;
    CHECK(meet(bottom(n), bottom(n)) == bottom(n));
    const ContingencyTable table = contingency(bottom(n), bottom(n));
    CHECK(table.cells().size() == static_cast<std::size_t>(n));

    std::mt19937_64 rng(5);
    std::vector<int> a(n), b(n);
    std::uniform_int_distribution<int> label(0, n - 1);
    for (int i = 0; i < n; ++i) {
        a[i] = label(rng);
        b[i] = label(rng);
    }
    const Clustering left = Clustering::from_labels(a);
    const Clustering right = Clustering::from_labels(b);
    const ContingencyTable big = contingency(left, right);  // hash path
    CHECK(big.cells().size() == static_cast<std::size_t>(meet(left, right).size()));
    std::vector<int> row_sum(big.rows(), 0);
    for (const auto& cell : big.cells()) {
        row_sum[cell.row] += cell.count;
    }
    CHECK(row_sum == big.row_sizes());
}

TEST_CASE("meet intersects all cluster pairs") {
    CHECK(meet(kLeft5, kRight5) == make(5, {{1, 2}, {3}, {4}, {5}}));
}

TEST_CASE("meet idempotence and bottom absorption") {
    CHECK(meet(kLeft5, kLeft5) == kLeft5);
    CHECK(meet(kLeft5, bottom(5)) == bottom(5));
}

TEST_CASE("join merges linked clusters") {
    const Clustering left = make(5, {{1, 2}, {3}, {4, 5}});
    const Clustering right = make(5, {{1, 2}, {3, 4, 5}});
    CHECK(join(left, right) == make(5, {{1, 2}, {3, 4, 5}}));
}

TEST_CASE("join idempotence and top absorption") {
    CHECK(join(kLeft5, kLeft5) == kLeft5);
    CHECK(join(kLeft5, top(5)) == top(5));
}

TEST_CASE("lattice order invariants on random pairs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 41;
        const Clustering left = random_clustering(n, rng);
        const Clustering right = random_clustering(n, rng);
        const Clustering m = meet(left, right);
        const Clustering j = join(left, right);
        CHECK(refines(m, left));
        CHECK(refines(m, right));
        CHECK(refines(left, j));
        CHECK(refines(right, j));
        CHECK(j.size() <= std::min(left.size(), right.size()));
        CHECK(std::max(left.size(), right.size()) <= m.size());
        CHECK(m.size() == static_cast<int>(contingency(left, right).cells().size()));
        CHECK(meet(left, right) == meet(right, left));
        CHECK(join(left, right) == join(right, left));
    }
}

TEST_CASE("components example") {
    const Clustering left = make(5, {{1, 2}, {3}, {4, 5}});
    const Clustering right = make(5, {{1, 2}, {3, 4, 5}});
    const auto comps = components(left, right);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].join_cluster == std::vector<PointId>{1, 2});
    CHECK(comps[1].join_cluster == std::vector<PointId>{3, 4, 5});
    CHECK(comps[0].left == std::vector<std::vector<PointId>>{{1, 2}});
    CHECK(comps[1].left == std::vector<std::vector<PointId>>{{3}, {4, 5}});
    CHECK(comps[1].right == std::vector<std::vector<PointId>>{{3, 4, 5}});
}

TEST_CASE("components of self are the clusters") {
    const auto comps = components(kLeft5, kLeft5);
    REQUIRE(comps.size() == 2);
    for (const auto& comp : comps) {
        CHECK(comp.left == comp.right);
        CHECK(comp.left.size() == 1);
    }
}

TEST_CASE("top against anything is one component") {
    const auto comps = components(top(5), kRight5);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].join_cluster == std::vector<PointId>{1, 2, 3, 4, 5});
    CHECK(comps[0].right.size() == 3);
}

TEST_CASE("components match the BFS oracle and the join") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 29;
        const Clustering left = random_clustering(n, rng);
        const Clustering right = random_clustering(n, rng);
        const auto comps = components(left, right);
        const auto oracle = bfs_component_points(left, right);
        const Clustering j = join(left, right);
        REQUIRE(comps.size() == oracle.size());
        REQUIRE(static_cast<int>(comps.size()) == j.size());
        for (std::size_t c = 0; c < comps.size(); ++c) {
            CHECK(comps[c].join_cluster == oracle[c]);
            CHECK(comps[c].join_cluster == j.cluster(static_cast<int>(c)));
            // left/right parts partition the join cluster
            std::vector<PointId> flat;
            for (const auto& part : comps[c].left) {
                flat.insert(flat.end(), part.begin(), part.end());
            }
            std::sort(flat.begin(), flat.end());
            CHECK(flat == comps[c].join_cluster);
        }
    }
}

TEST_SUITE_END();
