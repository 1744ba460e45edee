#pragma once

#include "boxdot/geograph.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace boxdot {

/// Unit square of the integer lattice, named by its lower-left corner.
struct LatticeFace {
  std::int64_t cx;
  std::int64_t cy;

  bool operator==(const LatticeFace& o) const { return cx == o.cx && cy == o.cy; }
  auto operator<=>(const LatticeFace& o) const = default;
};

/// Face of the lattice enclosing p. Throws Error(OnLattice) when p has an
/// integer coordinate.
LatticeFace square_of(const Point& p);

enum class VKind { Real, Lattice };
enum class EdgeKind { Graph, Lattice, Connector };

/// The quasi-planar augmentation of G with the lattice backbone: retained
/// graph edges, the boundary edges of every occupied square, and one
/// connector per real vertex down-left to its square's corner. Edges of G
/// that cross the lattice are kept aside in `crossing_set`.
struct VirtualGraph {
  struct VertexRec {
    Point pos;
    VKind kind;
  };
  struct EdgeRec {
    VertexId u, v;  // u < v by vertex id
    EdgeKind kind;
  };

  std::size_t n_real = 0;  // vertices 0..n_real-1 are V(G), ids unchanged
  std::vector<VertexRec> verts;
  std::vector<EdgeRec> edges;
  // CCW rotation at every vertex: (neighbor id, edge index)
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adj;

  std::vector<EdgeKey> crossing_set;               // C(L,G), real ids, u < v
  std::vector<std::vector<VertexId>> crossing_adj;  // per real vertex
  std::vector<LatticeFace> occupied;                // sorted, deduped
  std::map<std::pair<std::int64_t, std::int64_t>, VertexId> lattice_ids;

  bool is_real(VertexId v) const { return v < n_real; }
  VertexId lattice_vertex(std::int64_t x, std::int64_t y) const;
  std::size_t degree(VertexId v) const { return adj[v].size(); }
  /// Slot of `nbr` in v's rotation. Throws Error(InvalidArc) if absent.
  std::size_t rotation_index(VertexId v, VertexId nbr) const;
  /// succ over the full rotation system of the virtual graph.
  Arc rotation_succ(const Arc& e) const;
};

/// Construct G [.] L for a graph in general position. Classification of a
/// G-edge is combinatorial: it crosses the lattice iff its endpoints lie in
/// different squares (an edge of length <= 1 inside one open unit square
/// cannot meet the boundary).
/// Throws Error(GeneralPositionViolation) on lattice-degenerate input.
VirtualGraph build_virtual(const GeometricGraph& g);

struct BackboneFaces {
  std::vector<LatticeFace> bounded;       // unit squares with all 4 edges in L_G
  std::vector<LatticeFace> vertex_face;   // per real vertex: its square
};

/// Bounded faces of the backbone plus the face assignment of every real
/// vertex; the single outer face is implicit.
BackboneFaces faces_of_backbone(const VirtualGraph& vg);

}  // namespace boxdot
