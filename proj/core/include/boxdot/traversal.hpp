#pragma once

#include "boxdot/explorer.hpp"
#include "boxdot/geograph.hpp"
#include "boxdot/virtualgraph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace boxdot {

enum class Phase { Preliminary, Traversal };

struct TraversalEvent {
  enum class Kind { PhaseMark, MoveVirtual, RepositionReal, ReportVertex, ReportEdge };

  Kind kind{};
  std::uint64_t stage = 0;

  Phase phase{};                        // PhaseMark
  VertexId move_tail{}, move_head{};    // MoveVirtual, virtual vertex ids
  bool bounce = false;                  // MoveVirtual: reversal at a tree edge
  std::vector<VertexId> path;           // RepositionReal, real vertex ids
  VertexId vertex{};                    // ReportVertex, real id
  VertexId edge_u{}, edge_v{};          // ReportEdge, real ids, u < v
  bool via_crossing = false;            // ReportEdge came from the crossing rule
};

/// Reference point of the reporting rules: left(e_min) - (0,1).
struct ReferencePoint {
  Point p;
};

/// Totally ordered key of an undirected edge of the virtual graph: the
/// lexicographically smaller endpoint first, then the other one.
std::pair<Point, Point> arc_key(const VirtualGraph& vg, VertexId u, VertexId v);
bool arc_key_less(const std::pair<Point, Point>& a, const std::pair<Point, Point>& b);

/// Reporting rule for vertices, applied to the arc e the virtual robot just
/// traversed: report head(e) iff it is a real vertex and the reference point
/// lies in the cone at head(e) from the ray toward tail(e) (included)
/// counterclockwise to the ray toward head(succ(e)) (excluded). When
/// succ(e) = rev(e) the cone is the full plane.
bool should_report_vertex(const VirtualGraph& vg, const Arc& e, const ReferencePoint& p);

/// Reporting rule for edges: e is a retained graph edge and tail(e) is
/// strictly closer to the reference point, ties broken by lexicographic
/// comparison of the difference vectors toward p. Exactly one direction of
/// every retained edge passes.
bool should_report_edge(const VirtualGraph& vg, const Arc& e, const ReferencePoint& p);

struct PreliminaryResult {
  Arc e_min;                          // virtual arc, tail = left(e_min)
  std::vector<TraversalEvent> events;
  VertexId real_position;             // where the walk left the real robot
  std::uint64_t stages = 0;
  std::size_t max_pebbles = 0;
  std::size_t max_reposition_len = 0;
};

/// Preliminary phase: walk the faces of the lattice backbone L_G, shadowed
/// by the real robot, tracking the minimum-key lattice edge, and finish with
/// the virtual robot on the arc of that edge whose tail is its
/// lexicographically smaller endpoint.
PreliminaryResult find_e_min(const GeometricGraph& g, const VirtualGraph& vg,
                             VertexId start, const PebbleBudget& budget);

struct TraversalRun {
  std::vector<TraversalEvent> events;
  std::vector<Point> points;  // coordinates after general-position repair
  PebbleBudget budget;
  ReferencePoint reference;
  std::uint64_t stages = 0;
  std::size_t max_pebbles = 0;
  std::size_t max_reposition_len = 0;
  std::size_t reported_vertices = 0;
  std::size_t reported_edges = 0;
};

/// Full traversal with enumeration: repair general position, build the
/// virtual graph, find e_min, then walk all of G [.] L reporting every
/// vertex and edge of G exactly once while the real robot shadows within the
/// pebble budget. Requires a connected graph.
TraversalRun traverse_enumerate(const GeometricGraph& g, VertexId start = 0);

}  // namespace boxdot
