#pragma once

#include "boxdot/geograph.hpp"

#include <set>
#include <vector>

namespace boxdot {

/// The set W_T of chosen edge weights; injectivity makes it equivalent to
/// the edge set of the unique minimum spanning tree.
using WeightSet = std::set<Rational>;

/// 0 when no edge is heavier than w, otherwise the smallest weight > w.
/// Realized as a full edge scan via the traversal enumeration, keeping one
/// tentative-minimum register.
Rational next_weight(const GeometricGraph& g, const Rational& w);

/// 1 iff the endpoints of the weight-w edge are joined by a path whose
/// edges all weigh less than w: an early-exit reachability walk of the
/// subgraph of lighter edges. Throws Error(NoSuchWeight) if no edge has
/// weight w.
int discard_weight(const GeometricGraph& g, const Rational& w);

struct MstRun {
  WeightSet weights;
  /// Loop state excluding the write-only output: the current weight, the
  /// scan register, and the endpoint pair of the candidate edge.
  std::size_t working_registers = 0;
  std::size_t max_pebbles = 0;  // from the enumeration traversal
};

/// Minimum spanning tree by increasing weights, using only next-weight and
/// discard-weight scans. Requires a connected graph with a complete,
/// injective, strictly positive weight assignment.
MstRun min_spanning_tree(const GeometricGraph& g);

/// Map a weight set back to edges (weights are injective).
std::vector<EdgeKey> resolve_weights(const GeometricGraph& g, const WeightSet& ws);

/// Exhaustive check of the exclusion rule on small graphs (order <= 10):
/// an edge is outside the MST iff it lies on a cycle whose every edge
/// weighs at most as much. Throws Error(TooLarge) above 10 vertices.
bool check_cycle_lemma(const GeometricGraph& g, const WeightSet& mst);

}  // namespace boxdot
