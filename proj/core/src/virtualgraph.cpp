#include "boxdot/virtualgraph.hpp"

#include "boxdot/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace boxdot {

namespace {

std::int64_t floor_to_i64(const Rational& r) {
  BigInt f = rational_floor(r);
  if (f < std::numeric_limits<std::int64_t>::min() ||
      f > std::numeric_limits<std::int64_t>::max())
    raise(Errc::BadInput, "coordinate out of lattice range");
  return static_cast<std::int64_t>(f);
}

bool has_integer_coordinate(const Point& p) {
  return boost::multiprecision::denominator(p.x) == 1 ||
         boost::multiprecision::denominator(p.y) == 1;
}

}  // namespace

LatticeFace square_of(const Point& p) {
  if (has_integer_coordinate(p))
    raise(Errc::OnLattice, "point (" + to_decimal_string(p.x) + "," +
                               to_decimal_string(p.y) + ") has an integer coordinate");
  return {floor_to_i64(p.x), floor_to_i64(p.y)};
}

VertexId VirtualGraph::lattice_vertex(std::int64_t x, std::int64_t y) const {
  auto it = lattice_ids.find({x, y});
  if (it == lattice_ids.end())
    raise(Errc::BadInput, "lattice vertex (" + std::to_string(x) + "," +
                              std::to_string(y) + ") is not in L_G");
  return it->second;
}

std::size_t VirtualGraph::rotation_index(VertexId v, VertexId nbr) const {
  const auto& nbrs = adj[v];
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    if (nbrs[i].first == nbr) return i;
  raise(Errc::InvalidArc, "virtual arc (" + std::to_string(v) + "," +
                              std::to_string(nbr) + ") does not exist");
}

Arc VirtualGraph::rotation_succ(const Arc& e) const {
  const auto& nbrs = adj[e.head];
  std::size_t i = rotation_index(e.head, e.tail);
  return {e.head, nbrs[(i + 1) % nbrs.size()].first};
}

VirtualGraph build_virtual(const GeometricGraph& g) {
  VirtualGraph vg;
  vg.n_real = g.order();

  for (const Point& p : g.points)
    if (has_integer_coordinate(p))
      raise(Errc::GeneralPositionViolation, "vertex on a lattice line");

  vg.verts.reserve(g.order());
  for (const Point& p : g.points) vg.verts.push_back({p, VKind::Real});

  // Occupied squares and the lattice backbone L_G: the union of the four
  // corners and four boundary edges of every occupied square.
  std::vector<LatticeFace> squares;
  squares.reserve(g.order());
  for (const Point& p : g.points) squares.push_back(square_of(p));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  vg.occupied = squares;

  auto intern_lattice = [&](std::int64_t x, std::int64_t y) -> VertexId {
    auto it = vg.lattice_ids.find({x, y});
    if (it != vg.lattice_ids.end()) return it->second;
    VertexId id = static_cast<VertexId>(vg.verts.size());
    vg.verts.push_back({Point{Rational(x), Rational(y)}, VKind::Lattice});
    vg.lattice_ids.emplace(std::make_pair(x, y), id);
    return id;
  };

  std::set<std::pair<VertexId, VertexId>> lattice_edges;
  for (const LatticeFace& s : squares) {
    VertexId c00 = intern_lattice(s.cx, s.cy);
    VertexId c10 = intern_lattice(s.cx + 1, s.cy);
    VertexId c01 = intern_lattice(s.cx, s.cy + 1);
    VertexId c11 = intern_lattice(s.cx + 1, s.cy + 1);
    auto add = [&](VertexId a, VertexId b) {
      lattice_edges.insert({std::min(a, b), std::max(a, b)});
    };
    add(c00, c10);
    add(c10, c11);
    add(c11, c01);
    add(c01, c00);
  }
  for (auto [u, v] : lattice_edges) vg.edges.push_back({u, v, EdgeKind::Lattice});

  // Classify G-edges: same square keeps the edge, different squares move it
  // to the crossing set.
  auto through_lattice_point = [&](const Point& a, const Point& b) {
    std::int64_t x0 = floor_to_i64(a.x < b.x ? a.x : b.x);
    std::int64_t y0 = floor_to_i64(a.y < b.y ? a.y : b.y);
    for (std::int64_t x = x0; x <= x0 + 2; ++x)
      for (std::int64_t y = y0; y <= y0 + 2; ++y)
        if (point_on_segment(a, b, Point{Rational(x), Rational(y)})) return true;
    return false;
  };
  vg.crossing_adj.resize(g.order());
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.adjacency[u]) {
      if (u > v) continue;
      if (square_of(g.points[u]) == square_of(g.points[v])) {
        vg.edges.push_back({u, v, EdgeKind::Graph});
      } else {
        if (through_lattice_point(g.points[u], g.points[v]))
          raise(Errc::GeneralPositionViolation,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") passes through a lattice point");
        vg.crossing_set.push_back({u, v});
        vg.crossing_adj[u].push_back(v);
        vg.crossing_adj[v].push_back(u);
      }
    }
  }

  // Connectors l_v, and the degeneracy check that no connector passes
  // through another vertex.
  for (VertexId v = 0; v < g.order(); ++v) {
    LatticeFace s = square_of(g.points[v]);
    VertexId c = vg.lattice_vertex(s.cx, s.cy);
    for (VertexId w = 0; w < g.order(); ++w) {
      if (w == v) continue;
      if (point_on_segment(g.points[v], vg.verts[c].pos, g.points[w]))
        raise(Errc::GeneralPositionViolation,
              "connector of vertex " + std::to_string(v) + " passes through vertex " +
                  std::to_string(w));
    }
    VertexId a = std::min(v, c), b = std::max(v, c);
    vg.edges.push_back({a, b, EdgeKind::Connector});
  }

  // Rotation system over the union, counterclockwise from +x at every
  // vertex of the virtual graph.
  vg.adj.resize(vg.verts.size());
  for (std::uint32_t ei = 0; ei < vg.edges.size(); ++ei) {
    const auto& e = vg.edges[ei];
    vg.adj[e.u].push_back({e.v, ei});
    vg.adj[e.v].push_back({e.u, ei});
  }
  const Vec2 plus_x{1, 0};
  for (VertexId v = 0; v < vg.verts.size(); ++v) {
    const Point& origin = vg.verts[v].pos;
    std::sort(vg.adj[v].begin(), vg.adj[v].end(), [&](const auto& a, const auto& b) {
      return ccw_less(plus_x, vg.verts[a.first].pos - origin,
                      vg.verts[b.first].pos - origin);
    });
  }
  return vg;
}

BackboneFaces faces_of_backbone(const VirtualGraph& vg) {
  BackboneFaces out;
  std::set<std::pair<VertexId, VertexId>> lattice_edges;
  for (const auto& e : vg.edges)
    if (e.kind == EdgeKind::Lattice) lattice_edges.insert({e.u, e.v});
  auto has_lattice_edge = [&](std::int64_t x0, std::int64_t y0, std::int64_t x1,
                              std::int64_t y1) {
    auto a = vg.lattice_ids.find({x0, y0});
    auto b = vg.lattice_ids.find({x1, y1});
    if (a == vg.lattice_ids.end() || b == vg.lattice_ids.end()) return false;
    VertexId u = std::min(a->second, b->second), v = std::max(a->second, b->second);
    return lattice_edges.count({u, v}) > 0;
  };

  // A unit square is a bounded face of L_G exactly when its four boundary
  // edges are all present.
  std::set<LatticeFace> candidates;
  for (const auto& [xy, id] : vg.lattice_ids) candidates.insert({xy.first, xy.second});
  for (const LatticeFace& s : candidates) {
    if (has_lattice_edge(s.cx, s.cy, s.cx + 1, s.cy) &&
        has_lattice_edge(s.cx + 1, s.cy, s.cx + 1, s.cy + 1) &&
        has_lattice_edge(s.cx + 1, s.cy + 1, s.cx, s.cy + 1) &&
        has_lattice_edge(s.cx, s.cy + 1, s.cx, s.cy))
      out.bounded.push_back(s);
  }
  for (std::size_t v = 0; v < vg.n_real; ++v)
    out.vertex_face.push_back(square_of(vg.verts[v].pos));
  return out;
}

}  // namespace boxdot
