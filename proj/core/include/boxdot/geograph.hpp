#pragma once

#include "boxdot/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace boxdot {

using VertexId = std::uint32_t;

/// Directed copy of an undirected edge.
struct Arc {
  VertexId tail;
  VertexId head;

  bool operator==(const Arc& o) const { return tail == o.tail && head == o.head; }
  bool operator!=(const Arc& o) const { return !(*this == o); }
};

inline Arc rev(const Arc& e) { return {e.head, e.tail}; }

using EdgeKey = std::pair<VertexId, VertexId>;  // normalized u < v

inline EdgeKey edge_key(VertexId u, VertexId v) {
  return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

/// Unit-disk geometric graph: points, adjacency in counterclockwise rotation
/// order, and an optional injective edge-weight assignment.
struct GeometricGraph {
  std::vector<Point> points;
  std::vector<std::vector<VertexId>> adjacency;  // CCW from the +x direction
  std::map<EdgeKey, Rational> weights;           // empty when unweighted

  std::size_t order() const { return points.size(); }
  std::size_t degree(VertexId v) const { return adjacency[v].size(); }
  std::size_t edge_count() const;
  bool has_edge(VertexId u, VertexId v) const;
  std::vector<EdgeKey> edges() const;

  /// Position of `nbr` in v's rotation list. Throws Error(InvalidArc) if
  /// the edge does not exist.
  std::size_t rotation_index(VertexId v, VertexId nbr) const;
};

struct WeightAssignment {
  VertexId u;
  VertexId v;
  Rational w;
};

/// Build the unit-disk graph on `points`: an edge joins every pair at
/// squared Euclidean distance <= 1. O(n^2) pairwise construction.
GeometricGraph build_unit_disk_graph(const std::vector<Point>& points,
                                     const std::vector<WeightAssignment>& weights = {});

/// succ(e): first arc out of head(e) counterclockwise after rev(e).
Arc rotation_succ(const GeometricGraph& g, const Arc& e);
/// pred(e): the arc whose succ is e.
Arc rotation_pred(const GeometricGraph& g, const Arc& e);
/// next_around(e) = succ(rev(e)): next arc out of tail(e) after e.
Arc next_around(const GeometricGraph& g, const Arc& e);

struct PebbleBudget {
  /// max over qualifying vertex pairs of d_G^2 / d_E^2, or 1 when no pair
  /// has 1 < d_E^2 < 8.
  Rational r_squared_bound;
  /// floor(2*sqrt(2)*r), computed exactly: k^2 <= 8*r^2 < (k+1)^2.
  unsigned k;
};

/// Compute the stretch bound r(G) over pairs with Euclidean distance in
/// (1, 2*sqrt(2)), graph distances by all-pairs BFS, and the derived pebble
/// count. Requires a connected graph of order >= 2.
PebbleBudget compute_pebble_budget(const GeometricGraph& g);

/// Check the general-position conditions against the integer lattice:
/// no vertex with an integer coordinate, no graph edge through a lattice
/// point, no corner connector segment through another vertex.
bool in_general_position(const std::vector<Point>& points);

/// Return the points unchanged when already in general position, otherwise
/// translate every point by one common offset drawn deterministically from
/// `seed` (retrying until the conditions hold). Translation preserves all
/// pairwise distances, hence the edge set and rotation system.
std::vector<Point> ensure_general_position(const std::vector<Point>& points,
                                           std::uint64_t seed);

/// Graph distances from v by BFS; UNREACHED for other components.
inline constexpr std::uint32_t UNREACHED = 0xffffffffu;
std::vector<std::uint32_t> bfs_distances(const GeometricGraph& g, VertexId v);

bool is_connected(const GeometricGraph& g);

}  // namespace boxdot
