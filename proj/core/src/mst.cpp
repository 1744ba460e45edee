#include "boxdot/mst.hpp"

#include "boxdot/errors.hpp"
#include "boxdot/traversal.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace boxdot {

namespace {

void require_weighted(const GeometricGraph& g) {
  for (const auto& e : g.edges()) {
    auto it = g.weights.find(e);
    if (it == g.weights.end())
      raise(Errc::BadInput, "edge (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") has no weight");
    if (!(it->second > 0)) raise(Errc::BadInput, "edge weights must be positive");
  }
}

// Edge weights in the order the traversal enumeration reports them; each
// edge appears exactly once (walk reports plus crossing reports).
std::vector<Rational> enumerated_weights(const GeometricGraph& g) {
  std::vector<Rational> out;
  TraversalRun run = traverse_enumerate(g);
  for (const auto& ev : run.events) {
    if (ev.kind != TraversalEvent::Kind::ReportEdge) continue;
    out.push_back(g.weights.at(edge_key(ev.edge_u, ev.edge_v)));
  }
  return out;
}

Rational scan_next(const std::vector<Rational>& weights, const Rational& w) {
  Rational best = 0;
  for (const Rational& x : weights)
    if (x > w && (best == 0 || x < best)) best = x;
  return best;
}

// Early-exit reachability inside the subgraph of edges lighter than w.
bool connected_below(const GeometricGraph& g, VertexId a, VertexId b, const Rational& w) {
  std::vector<bool> seen(g.order(), false);
  std::deque<VertexId> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : g.adjacency[u]) {
      if (seen[v]) continue;
      if (!(g.weights.at(edge_key(u, v)) < w)) continue;
      if (v == b) return true;
      seen[v] = true;
      queue.push_back(v);
    }
  }
  return false;
}

EdgeKey edge_with_weight(const GeometricGraph& g, const Rational& w) {
  for (const auto& [key, wt] : g.weights)
    if (wt == w) return key;
  raise(Errc::NoSuchWeight, "no edge has weight " + to_decimal_string(w));
}

}  // namespace

Rational next_weight(const GeometricGraph& g, const Rational& w) {
  require_weighted(g);
  if (g.edge_count() == 0) return 0;
  return scan_next(enumerated_weights(g), w);
}

int discard_weight(const GeometricGraph& g, const Rational& w) {
  require_weighted(g);
  EdgeKey e = edge_with_weight(g, w);
  return connected_below(g, e.first, e.second, w) ? 1 : 0;
}

MstRun min_spanning_tree(const GeometricGraph& g) {
  if (!is_connected(g)) raise(Errc::Disconnected, "spanning tree needs a connected graph");
  require_weighted(g);
  MstRun run;
  run.working_registers = 4;  // x, scan register, candidate endpoint pair
  if (g.edge_count() == 0) return run;

  // One enumeration pass feeds every next-weight scan; repeated traversals
  // of the same immutable graph are identical, so replaying the list is the
  // same scan the traversal would produce each time.
  TraversalRun tr = traverse_enumerate(g);
  run.max_pebbles = tr.max_pebbles;
  std::vector<Rational> order;
  for (const auto& ev : tr.events)
    if (ev.kind == TraversalEvent::Kind::ReportEdge)
      order.push_back(g.weights.at(edge_key(ev.edge_u, ev.edge_v)));

  Rational x = scan_next(order, 0);
  run.weights.insert(x);  // the lightest edge is always admitted
  while (x != 0) {
    Rational nxt = scan_next(order, x);
    if (nxt == 0) return run;
    x = nxt;
    EdgeKey e = edge_with_weight(g, x);
    if (!connected_below(g, e.first, e.second, x)) run.weights.insert(x);
  }
  return run;
}

std::vector<EdgeKey> resolve_weights(const GeometricGraph& g, const WeightSet& ws) {
  std::vector<EdgeKey> out;
  for (const Rational& w : ws) out.push_back(edge_with_weight(g, w));
  return out;
}

namespace {

// All simple cycles, canonicalized: smallest vertex first, second vertex
// smaller than the last. Fine for order <= 10.
void cycles_from(const GeometricGraph& g, VertexId root, std::vector<VertexId>& path,
                 std::vector<bool>& on_path, std::vector<std::vector<VertexId>>& out) {
  VertexId u = path.back();
  for (VertexId v : g.adjacency[u]) {
    if (v == root && path.size() >= 3) {
      if (path[1] < path.back()) out.push_back(path);
      continue;
    }
    if (v <= root || on_path[v]) continue;
    on_path[v] = true;
    path.push_back(v);
    cycles_from(g, root, path, on_path, out);
    path.pop_back();
    on_path[v] = false;
  }
}

std::vector<std::vector<VertexId>> all_simple_cycles(const GeometricGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> on_path(g.order(), false);
  for (VertexId root = 0; root < g.order(); ++root) {
    std::vector<VertexId> path{root};
    on_path[root] = true;
    cycles_from(g, root, path, on_path, out);
    on_path[root] = false;
  }
  return out;
}

}  // namespace

bool check_cycle_lemma(const GeometricGraph& g, const WeightSet& mst) {
  if (g.order() > 10) raise(Errc::TooLarge, "cycle lemma check is exhaustive, order <= 10");
  auto cycles = all_simple_cycles(g);
  for (const auto& e : g.edges()) {
    Rational w = g.weights.at(e);
    bool excluded = mst.count(w) == 0;
    bool has_cycle = false;
    for (const auto& cyc : cycles) {
      bool contains = false, all_light = true;
      for (std::size_t i = 0; i < cyc.size() && all_light; ++i) {
        VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        EdgeKey k = edge_key(a, b);
        if (k == e) contains = true;
        if (g.weights.at(k) > w) all_light = false;
      }
      if (contains && all_light) {
        has_cycle = true;
        break;
      }
    }
    if (excluded != has_cycle) return false;
  }
  return true;
}

}  // namespace boxdot
