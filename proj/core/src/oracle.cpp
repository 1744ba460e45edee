#include "boxdot/oracle.hpp"

#include "boxdot/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace boxdot {

std::set<VertexId> bfs_neighborhood(const GeometricGraph& g, VertexId v, unsigned k) {
  std::set<VertexId> out{v};
  std::vector<bool> seen(g.order(), false);
  seen[v] = true;
  std::deque<std::pair<VertexId, unsigned>> queue{{v, 0}};
  while (!queue.empty()) {
    auto [u, d] = queue.front();
    queue.pop_front();
    if (d == k) continue;
    for (VertexId w : g.adjacency[u])
      if (!seen[w]) {
        seen[w] = true;
        out.insert(w);
        queue.push_back({w, d + 1});
      }
  }
  return out;
}

WeightSet kruskal(const GeometricGraph& g) {
  std::vector<EdgeKey> edges = g.edges();
  for (const auto& e : edges)
    if (!g.weights.count(e)) raise(Errc::BadInput, "kruskal needs a fully weighted graph");
  std::sort(edges.begin(), edges.end(), [&](const EdgeKey& a, const EdgeKey& b) {
    return g.weights.at(a) < g.weights.at(b);
  });
  std::vector<VertexId> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  WeightSet out;
  std::size_t joined = 0;
  for (const auto& e : edges) {
    VertexId a = find(e.first), b = find(e.second);
    if (a == b) continue;
    parent[b] = a;
    out.insert(g.weights.at(e));
    ++joined;
  }
  if (g.order() > 0 && joined + 1 != g.order())
    raise(Errc::Disconnected, "kruskal: input graph is disconnected");
  return out;
}

OracleReport verify_enumeration(const GeometricGraph& g,
                                const std::vector<TraversalEvent>& events) {
  OracleReport rep{"enumeration", true, ""};
  std::vector<unsigned> vcount(g.order(), 0);
  std::map<EdgeKey, unsigned> ecount;
  for (const auto& e : g.edges()) ecount[e] = 0;
  for (const auto& ev : events) {
    if (ev.kind == TraversalEvent::Kind::ReportVertex) {
      if (ev.vertex >= g.order()) {
        rep.passed = false;
        rep.details = "reported unknown vertex " + std::to_string(ev.vertex);
        return rep;
      }
      ++vcount[ev.vertex];
    } else if (ev.kind == TraversalEvent::Kind::ReportEdge) {
      auto it = ecount.find(edge_key(ev.edge_u, ev.edge_v));
      if (it == ecount.end()) {
        rep.passed = false;
        rep.details = "reported non-edge (" + std::to_string(ev.edge_u) + "," +
                      std::to_string(ev.edge_v) + ")";
        return rep;
      }
      ++it->second;
    }
  }
  for (VertexId v = 0; v < g.order(); ++v)
    if (vcount[v] != 1) {
      rep.passed = false;
      rep.details = "vertex " + std::to_string(v) + " reported " +
                    std::to_string(vcount[v]) + " times";
      return rep;
    }
  for (const auto& [e, c] : ecount)
    if (c != 1) {
      rep.passed = false;
      rep.details = "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                    ") reported " + std::to_string(c) + " times";
      return rep;
    }
  return rep;
}

OracleReport verify_quasi_planar(const VirtualGraph& vg) {
  OracleReport rep{"quasi_planar", true, ""};
  for (std::size_t i = 0; i < vg.edges.size(); ++i) {
    if (vg.edges[i].kind != EdgeKind::Lattice) continue;
    const Point& a = vg.verts[vg.edges[i].u].pos;
    const Point& b = vg.verts[vg.edges[i].v].pos;
    for (std::size_t j = 0; j < vg.edges.size(); ++j) {
      if (i == j) continue;
      const Point& c = vg.verts[vg.edges[j].u].pos;
      const Point& d = vg.verts[vg.edges[j].v].pos;
      if (segments_cross(a, b, c, d)) {
        rep.passed = false;
        rep.details = "lattice edge " + std::to_string(i) + " crossed by edge " +
                      std::to_string(j);
        return rep;
      }
    }
  }
  return rep;
}

OracleReport verify_left_neighbor(const VirtualGraph& vg) {
  OracleReport rep{"left_neighbor", true, ""};
  for (VertexId v = 0; v < vg.n_real; ++v) {
    bool found = false;
    for (const auto& [nbr, ei] : vg.adj[v]) {
      if (vg.edges[ei].kind != EdgeKind::Connector) continue;
      found = true;
      if (!(vg.verts[nbr].pos.x < vg.verts[v].pos.x)) {
        rep.passed = false;
        rep.details = "connector of vertex " + std::to_string(v) +
                      " does not go to a smaller x coordinate";
        return rep;
      }
    }
    if (!found) {
      rep.passed = false;
      rep.details = "vertex " + std::to_string(v) + " has no connector";
      return rep;
    }
  }
  return rep;
}

}  // namespace boxdot
