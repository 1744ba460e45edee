#pragma once

#include "boxdot/geograph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace boxdot {

enum class Mode { fw, bw };

/// Machine state of the k-neighborhood walk: the pebbled vertices as the
/// path they induce (from the start vertex to the frontier), the current
/// arc, and the scan mode.
struct ExplorationState {
  std::vector<VertexId> pebbled;  // path order, pebbled.front() is the start
  Arc current_arc;
  Mode mode;

  bool operator==(const ExplorationState& o) const {
    return pebbled == o.pebbled && current_arc == o.current_arc && mode == o.mode;
  }
};

struct ExplorationTrace {
  std::vector<ExplorationState> states;  // iterations 1..T, state 1 is initial
  std::vector<VertexId> visited;         // sorted
  std::size_t max_pebbled = 0;           // peak |P| over the trace
};

/// First state: the arc out of v with the smallest counterclockwise angle
/// from the +x axis, P = {v, head}, forward mode.
/// Throws Error(IsolatedVertex) when deg(v) = 0, Error(BadBudget) when k < 1.
ExplorationState initial_state(const GeometricGraph& g, VertexId v, unsigned k);

/// One transition. Returns nullopt when the walk lands back on e0 in
/// backward mode (termination).
std::optional<ExplorationState> step(const GeometricGraph& g, const ExplorationState& s,
                                     unsigned k, const Arc& e0);

/// Visit every vertex of N^k[v] with k+1 pebbles, recording the full state
/// trace. deg(v) = 0 yields visited = {v} and an empty trace.
/// `max_iterations` guards termination in tests; 0 picks a generous default.
ExplorationTrace explore(const GeometricGraph& g, VertexId v, unsigned k,
                         std::uint64_t max_iterations = 0);

struct EarlyStopResult {
  VertexId found;
  std::vector<VertexId> path;  // pebbled path from v to found, |path|-1 <= k
  std::size_t max_pebbled;
};

/// Run the same walk but stop at the first pebbled vertex satisfying `stop`
/// (the start vertex is checked first). Returns nullopt if the walk
/// terminates without a hit.
std::optional<EarlyStopResult> explore_until(const GeometricGraph& g, VertexId v,
                                             unsigned k,
                                             const std::function<bool(VertexId)>& stop);

}  // namespace boxdot
