#pragma once

#include <vector>

#include "clucmp/clustering.hpp"
#include "clucmp/contingency.hpp"

namespace clucmp {

/// One weakly connected component of the cluster bipartite graph, identified
/// with a cluster J of the join. `left` and `right` are the clusters of the
/// two clusterings that fall inside J, kept in original point ids so that
/// downstream consumers (subcomponent scoring, feature lookups) need no id
/// translation.
struct Component {
    std::vector<PointId> join_cluster;
    std::vector<std::vector<PointId>> left;
    std::vector<std::vector<PointId>> right;
};

/// Partition of all nonempty pairwise intersections; refines both inputs.
Clustering meet(const Clustering& left, const Clustering& right);
Clustering meet(const ContingencyTable& table);

/// Coarsest-count partition refined by both inputs; computed as the connected
/// components of the cluster bipartite graph via union-find over clusters.
Clustering join(const Clustering& left, const Clustering& right);
Clustering join(const ContingencyTable& table);

/// One Component per join cluster, ordered by smallest point id.
std::vector<Component> components(const Clustering& left, const Clustering& right);

}  // namespace clucmp
