#pragma once

#include "boxdot/geograph.hpp"
#include "boxdot/mst.hpp"
#include "boxdot/traversal.hpp"
#include "boxdot/virtualgraph.hpp"

#include <set>
#include <string>
#include <vector>

namespace boxdot {

struct OracleReport {
  std::string name;
  bool passed = true;
  std::string details;  // minimal reproducer description when failed
};

/// N^k[v] by plain breadth-first search.
std::set<VertexId> bfs_neighborhood(const GeometricGraph& g, VertexId v, unsigned k);

/// Classical sorted-edges + union-find minimum spanning tree; the reference
/// for min_spanning_tree. Throws Error(Disconnected) on disconnected input.
WeightSet kruskal(const GeometricGraph& g);

/// Every vertex and edge reported exactly once.
OracleReport verify_enumeration(const GeometricGraph& g,
                                const std::vector<TraversalEvent>& events);

/// Exact segment intersection of every lattice edge against every other
/// edge of the virtual graph: the backbone must be uncrossed.
OracleReport verify_quasi_planar(const VirtualGraph& vg);

/// Every real vertex has its connector target strictly to the left.
OracleReport verify_left_neighbor(const VirtualGraph& vg);

}  // namespace boxdot
