#include "boxdot/geograph.hpp"

#include "boxdot/errors.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>

namespace boxdot {

std::size_t GeometricGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

bool GeometricGraph::has_edge(VertexId u, VertexId v) const {
  const auto& nbrs = adjacency[u];
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

std::vector<EdgeKey> GeometricGraph::edges() const {
  std::vector<EdgeKey> out;
  for (VertexId u = 0; u < adjacency.size(); ++u)
    for (VertexId v : adjacency[u])
      if (u < v) out.push_back({u, v});
  return out;
}

std::size_t GeometricGraph::rotation_index(VertexId v, VertexId nbr) const {
  const auto& nbrs = adjacency[v];
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    if (nbrs[i] == nbr) return i;
  raise(Errc::InvalidArc, "arc (" + std::to_string(v) + "," + std::to_string(nbr) +
                              ") is not in the graph");
}

GeometricGraph build_unit_disk_graph(const std::vector<Point>& points,
                                     const std::vector<WeightAssignment>& weights) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i] == points[j])
        raise(Errc::DuplicatePoint,
              "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  GeometricGraph g;
  g.points = points;
  g.adjacency.resize(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (squared_distance(points[i], points[j]) <= 1) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }

  // Rotation system: counterclockwise from the +x direction at each vertex.
  const Vec2 plus_x{1, 0};
  for (VertexId v = 0; v < n; ++v) {
    std::sort(g.adjacency[v].begin(), g.adjacency[v].end(), [&](VertexId a, VertexId b) {
      return ccw_less(plus_x, points[a] - points[v], points[b] - points[v]);
    });
  }

  std::set<Rational> seen;
  for (const auto& wa : weights) {
    if (!g.has_edge(wa.u, wa.v))
      raise(Errc::BadInput, "weight given for non-edge (" + std::to_string(wa.u) + "," +
                                std::to_string(wa.v) + ")");
    if (!seen.insert(wa.w).second)
      raise(Errc::NonInjectiveWeights, "duplicate edge weight " + to_decimal_string(wa.w));
    if (!g.weights.emplace(edge_key(wa.u, wa.v), wa.w).second)
      raise(Errc::BadInput, "weight given twice for one edge");
  }
  return g;
}

Arc rotation_succ(const GeometricGraph& g, const Arc& e) {
  const auto& nbrs = g.adjacency[e.head];
  std::size_t i = g.rotation_index(e.head, e.tail);  // position of rev(e)
  return {e.head, nbrs[(i + 1) % nbrs.size()]};
}

Arc rotation_pred(const GeometricGraph& g, const Arc& e) {
  const auto& nbrs = g.adjacency[e.tail];
  std::size_t i = g.rotation_index(e.tail, e.head);
  VertexId x = nbrs[(i + nbrs.size() - 1) % nbrs.size()];
  return {x, e.tail};
}

Arc next_around(const GeometricGraph& g, const Arc& e) {
  const auto& nbrs = g.adjacency[e.tail];
  std::size_t i = g.rotation_index(e.tail, e.head);
  return {e.tail, nbrs[(i + 1) % nbrs.size()]};
}

std::vector<std::uint32_t> bfs_distances(const GeometricGraph& g, VertexId v) {
  std::vector<std::uint32_t> dist(g.order(), UNREACHED);
  std::deque<VertexId> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.adjacency[u])
      if (dist[w] == UNREACHED) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

bool is_connected(const GeometricGraph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::uint32_t d) { return d == UNREACHED; });
}

PebbleBudget compute_pebble_budget(const GeometricGraph& g) {
  if (g.order() < 2) raise(Errc::TooSmall, "pebble budget needs order >= 2");
  if (!is_connected(g)) raise(Errc::Disconnected, "pebble budget needs a connected graph");

  // r^2 = max d_G^2/d_E^2 over pairs with 1 < d_E^2 < 8. The squared form
  // keeps everything rational; k then satisfies k^2 <= 8 r^2 < (k+1)^2.
  Rational best = 0;
  bool any = false;
  for (VertexId v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    for (VertexId u = v + 1; u < g.order(); ++u) {
      Rational de2 = squared_distance(g.points[v], g.points[u]);
      if (!(de2 > 1 && de2 < 8)) continue;
      Rational ratio = Rational(static_cast<long>(dist[u])) *
                       Rational(static_cast<long>(dist[u])) / de2;
      if (!any || ratio > best) {
        best = ratio;
        any = true;
      }
    }
  }
  if (!any) best = 1;  // vacuous bound: adopt r(G) = 1, k = 2
  PebbleBudget b;
  b.r_squared_bound = best;
  b.k = static_cast<unsigned>(floor_sqrt(Rational(8) * best));
  return b;
}

namespace {

bool has_integer_coordinate(const Point& p) {
  return boost::multiprecision::denominator(p.x) == 1 ||
         boost::multiprecision::denominator(p.y) == 1;
}

Point corner_point(const Point& p) {
  return {Rational(rational_floor(p.x)), Rational(rational_floor(p.y))};
}

// Does the open segment u-w pass through a point of Z x Z? Since the edge
// has length <= 1 only the lattice points of the segment's bounding box can
// qualify, at most four of them.
bool edge_through_lattice_point(const Point& u, const Point& w) {
  BigInt x0 = rational_floor(u.x < w.x ? u.x : w.x);
  BigInt x1 = rational_floor(u.x < w.x ? w.x : u.x) + 1;
  BigInt y0 = rational_floor(u.y < w.y ? u.y : w.y);
  BigInt y1 = rational_floor(u.y < w.y ? w.y : u.y) + 1;
  for (BigInt x = x0; x <= x1; ++x)
    for (BigInt y = y0; y <= y1; ++y) {
      Point lp{Rational(x), Rational(y)};
      if (lp == u || lp == w) continue;
      if (point_on_segment(u, w, lp)) return true;
    }
  return false;
}

}  // namespace

bool in_general_position(const std::vector<Point>& points) {
  for (const Point& p : points)
    if (has_integer_coordinate(p)) return false;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (squared_distance(points[i], points[j]) <= 1 &&
          edge_through_lattice_point(points[i], points[j]))
        return false;
  // connector l_v from v to the lower-left corner of its square must not
  // pass through another vertex
  for (std::size_t i = 0; i < n; ++i) {
    Point c = corner_point(points[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (points[j] != points[i] && points[j] != c &&
          point_on_segment(points[i], c, points[j]))
        return false;
    }
  }
  return true;
}

std::vector<Point> ensure_general_position(const std::vector<Point>& points,
                                           std::uint64_t seed) {
  if (in_general_position(points)) return points;
  std::mt19937_64 rng(seed);
  // Offsets are decimals with growing precision so that translated
  // coordinates stay exactly representable as decimal strings.
  for (int attempt = 0;; ++attempt) {
    unsigned digits = 2 + static_cast<unsigned>(attempt / 8);
    BigInt scale = 1;
    for (unsigned d = 0; d < digits; ++d) scale *= 10;
    std::uint64_t span = 1;
    for (unsigned d = 0; d < digits; ++d) span *= 10;
    Rational dx(BigInt(1 + rng() % (span - 1)), scale);
    Rational dy(BigInt(1 + rng() % (span - 1)), scale);
    std::vector<Point> moved;
    moved.reserve(points.size());
    for (const Point& p : points) moved.push_back({p.x + dx, p.y + dy});
    if (in_general_position(moved)) return moved;
  }
}

}  // namespace boxdot
