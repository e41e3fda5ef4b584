#pragma once

#include <utility>
#include <vector>

#include "clucmp/lattice.hpp"

namespace clucmp {

/// A cluster of the left clustering together with the partition the right
/// clustering induces on it. Point ids are the original ones.
struct SplitGraph {
    std::vector<PointId> source;
    std::vector<std::vector<PointId>> targets;
};

/// Dual of SplitGraph: the left-induced partition of a right cluster.
struct MergeGraph {
    std::vector<std::vector<PointId>> sources;
    std::vector<PointId> target;
};

/// The unique (split graph, merge graph) pair whose clusters intersect in a
/// given meet cluster: split.source ∩ merge.target = meet_cluster.
struct SubcomponentPair {
    std::vector<PointId> meet_cluster;
    SplitGraph split;
    MergeGraph merge;
};

/// Tripartite left → meet → right graph describing the split-then-merge
/// transformation. Edges are (cluster index, cluster index) pairs in the
/// canonical index spaces of the three clusterings; every meet vertex has
/// exactly one incoming split edge and one outgoing merge edge.
struct DerivationGraph {
    Clustering left_part;
    Clustering middle_part;
    Clustering right_part;
    std::vector<std::pair<int, int>> split_edges;  // left index -> middle index
    std::vector<std::pair<int, int>> merge_edges;  // middle index -> right index
};

/// One split graph per cluster of component.left.
std::vector<SplitGraph> split_set(const Component& component);

/// One merge graph per cluster of component.right.
std::vector<MergeGraph> merge_set(const Component& component);

DerivationGraph derivation_graph(const Clustering& left, const Clustering& right);

/// One pair per meet cluster, in meet-cluster order.
std::vector<SubcomponentPair> subcomponent_pairs(const Clustering& left, const Clustering& right);

}  // namespace clucmp
