#include "boxdot/traversal.hpp"

#include "boxdot/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace boxdot {

std::pair<Point, Point> arc_key(const VirtualGraph& vg, VertexId u, VertexId v) {
  const Point& a = vg.verts[u].pos;
  const Point& b = vg.verts[v].pos;
  return lex_less(a, b) ? std::pair{a, b} : std::pair{b, a};
}

bool arc_key_less(const std::pair<Point, Point>& a, const std::pair<Point, Point>& b) {
  if (a.first != b.first) return lex_less(a.first, b.first);
  return lex_less(a.second, b.second);
}

namespace {

EdgeKind edge_kind_between(const VirtualGraph& vg, VertexId u, VertexId v) {
  for (const auto& [nbr, ei] : vg.adj[u])
    if (nbr == v) return vg.edges[ei].kind;
  raise(Errc::InvalidArc, "no virtual edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
}

// Dense arc table over the virtual graph (optionally restricted to the
// lattice backbone), with succ = "first arc counterclockwise after the
// reverse" and the spanning tree of the succ-orbit graph that drives the
// tree-of-faces walk.
//
// Orbits of succ are the combinatorial faces of the map; each orbit walks
// the boundary of its face clockwise (face on the right of every arc). A
// face-local minimum-key entry rule does not in general connect all orbits
// of a quasi-planar map, so the tree is built globally: Kruskal over the
// orbit graph in arc-key order. Marking every tree edge and reversing on
// them turns the walk into a single cycle through all arcs.
struct WalkMap {
  const VirtualGraph* vg = nullptr;
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> rot;  // filtered CCW
  std::vector<std::uint32_t> offset;      // per vertex: first arc id
  std::vector<VertexId> tail, head;       // per arc
  std::vector<std::uint32_t> edge_of;     // per arc: index into vg->edges
  std::vector<std::uint32_t> arc_rev, arc_succ;
  std::vector<char> link;                 // per vg edge: orbit-tree edge?
  std::uint32_t n_arcs = 0;
  std::uint32_t emin_edge = 0;
  std::uint32_t emin_arc = 0;             // tail = lex-min endpoint of e_min

  std::uint32_t arc_of(VertexId t, VertexId h) const {
    for (std::size_t s = 0; s < rot[t].size(); ++s)
      if (rot[t][s].first == h) return offset[t] + static_cast<std::uint32_t>(s);
    raise(Errc::InvalidArc, "arc not present in walk map");
  }
  Arc as_arc(std::uint32_t a) const { return {tail[a], head[a]}; }
};

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

WalkMap build_walk_map(const VirtualGraph& vg, bool lattice_only) {
  WalkMap m;
  m.vg = &vg;
  const std::size_t nv = vg.verts.size();
  m.rot.resize(nv);
  for (VertexId v = 0; v < nv; ++v)
    for (const auto& [nbr, ei] : vg.adj[v])
      if (!lattice_only || vg.edges[ei].kind == EdgeKind::Lattice)
        m.rot[v].push_back({nbr, ei});

  m.offset.resize(nv + 1, 0);
  for (VertexId v = 0; v < nv; ++v)
    m.offset[v + 1] = m.offset[v] + static_cast<std::uint32_t>(m.rot[v].size());
  m.n_arcs = m.offset[nv];
  m.tail.resize(m.n_arcs);
  m.head.resize(m.n_arcs);
  m.edge_of.resize(m.n_arcs);
  for (VertexId v = 0; v < nv; ++v)
    for (std::size_t s = 0; s < m.rot[v].size(); ++s) {
      std::uint32_t a = m.offset[v] + static_cast<std::uint32_t>(s);
      m.tail[a] = v;
      m.head[a] = m.rot[v][s].first;
      m.edge_of[a] = m.rot[v][s].second;
    }

  // rev via the two arcs of every participating edge
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_arcs(
      vg.edges.size(), {UNREACHED, UNREACHED});
  for (std::uint32_t a = 0; a < m.n_arcs; ++a) {
    auto& pr = edge_arcs[m.edge_of[a]];
    (pr.first == UNREACHED ? pr.first : pr.second) = a;
  }
  m.arc_rev.resize(m.n_arcs);
  for (const auto& [a, b] : edge_arcs) {
    if (a == UNREACHED) continue;
    m.arc_rev[a] = b;
    m.arc_rev[b] = a;
  }

  // succ(e) = next arc counterclockwise after rev(e) around head(e)
  m.arc_succ.resize(m.n_arcs);
  for (std::uint32_t a = 0; a < m.n_arcs; ++a) {
    VertexId h = m.head[a];
    std::uint32_t deg = static_cast<std::uint32_t>(m.rot[h].size());
    std::uint32_t rev_slot = m.arc_rev[a] - m.offset[h];
    m.arc_succ[a] = m.offset[h] + (rev_slot + 1) % deg;
  }

  // succ-orbits
  std::vector<std::uint32_t> orbit(m.n_arcs, UNREACHED);
  std::uint32_t n_orbits = 0;
  for (std::uint32_t a = 0; a < m.n_arcs; ++a) {
    if (orbit[a] != UNREACHED) continue;
    for (std::uint32_t b = a; orbit[b] == UNREACHED; b = m.arc_succ[b]) orbit[b] = n_orbits;
    ++n_orbits;
  }

  // Kruskal over orbits in edge-key order; the first union is e_min itself.
  std::vector<std::uint32_t> participating;
  for (std::uint32_t ei = 0; ei < vg.edges.size(); ++ei)
    if (edge_arcs[ei].first != UNREACHED) participating.push_back(ei);
  std::sort(participating.begin(), participating.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return arc_key_less(arc_key(vg, vg.edges[a].u, vg.edges[a].v),
                                  arc_key(vg, vg.edges[b].u, vg.edges[b].v));
            });
  if (participating.empty()) raise(Errc::BadInput, "walk map with no edges");

  m.link.assign(vg.edges.size(), 0);
  Dsu dsu(n_orbits);
  for (std::uint32_t ei : participating) {
    auto [a, b] = edge_arcs[ei];
    if (dsu.unite(orbit[a], orbit[b])) m.link[ei] = 1;
  }

  m.emin_edge = participating.front();
  if (vg.edges[m.emin_edge].kind != EdgeKind::Lattice)
    throw std::logic_error("global minimum edge is not a lattice edge");
  {
    auto [a, b] = edge_arcs[m.emin_edge];
    const Point& ta = vg.verts[m.tail[a]].pos;
    const Point& tb = vg.verts[m.tail[b]].pos;
    m.emin_arc = lex_less(ta, tb) ? a : b;
  }
  return m;
}

std::pair<std::int64_t, std::int64_t> lattice_xy(const VirtualGraph& vg, VertexId v) {
  const Point& p = vg.verts[v].pos;
  return {static_cast<std::int64_t>(boost::multiprecision::numerator(p.x)),
          static_cast<std::int64_t>(boost::multiprecision::numerator(p.y))};
}

// Real-robot shadow of the virtual walk. After every virtual step the real
// robot either stays (its square still touches the traversed edge), joins
// the virtual robot on a real vertex, or repositions into a face flanking
// the traversed edge via a budgeted exploration of G.
class Shadow {
 public:
  Shadow(const GeometricGraph& g, const VirtualGraph& vg, unsigned k, VertexId start)
      : g_(g), vg_(vg), k_(k), pos_(start) {
    squares_.reserve(g.order());
    for (const Point& p : g.points) squares_.push_back(square_of(p));
  }

  VertexId position() const { return pos_; }
  std::size_t max_pebbles() const { return max_pebbles_; }
  std::size_t max_reposition_len() const { return max_reposition_len_; }

  void follow(const Arc& varc, std::uint32_t vg_edge, std::uint64_t stage,
              std::vector<TraversalEvent>& events) {
    const auto& e = vg_.edges[vg_edge];
    if (vg_.is_real(varc.head)) {
      VertexId target = varc.head;
      if (pos_ == target) {
        check_distance(varc.head);
        return;
      }
      if (e.kind == EdgeKind::Graph && pos_ == varc.tail) {
        // moving along an edge of G: the real robot makes the same move
        record({pos_, target}, 2, stage, events);
        pos_ = target;
      } else {
        reposition([&](VertexId w) { return w == target; }, stage, events);
      }
    } else {
      auto flanks = flanking_squares(varc, e);
      if (in_flanks(squares_[pos_], flanks)) {
        check_distance(varc.head);
        return;
      }
      reposition([&](VertexId w) { return in_flanks(squares_[w], flanks); }, stage,
                 events);
    }
    check_distance(varc.head);
  }

 private:
  struct Flanks {
    LatticeFace a, b;
    bool two = false;
  };

  Flanks flanking_squares(const Arc& varc, const VirtualGraph::EdgeRec& e) const {
    if (e.kind == EdgeKind::Lattice) {
      auto [x0, y0] = lattice_xy(vg_, e.u);
      auto [x1, y1] = lattice_xy(vg_, e.v);
      if (x0 == x1) {  // vertical
        std::int64_t y = std::min(y0, y1);
        return {{x0 - 1, y}, {x0, y}, true};
      }
      std::int64_t x = std::min(x0, x1);
      return {{x, y0 - 1}, {x, y0}, true};
    }
    VertexId real_end = vg_.is_real(e.u) ? e.u : e.v;
    return {squares_[real_end], squares_[real_end], false};
  }

  static bool in_flanks(const LatticeFace& s, const Flanks& f) {
    return s == f.a || (f.two && s == f.b);
  }

  void reposition(const std::function<bool(VertexId)>& pred, std::uint64_t stage,
                  std::vector<TraversalEvent>& events) {
    auto res = explore_until(g_, pos_, k_, pred);
    if (!res)
      throw std::logic_error("real robot found no target within the pebble budget");
    record(res->path, res->max_pebbled, stage, events);
    pos_ = res->found;
  }

  void record(std::vector<VertexId> path, std::size_t pebbles, std::uint64_t stage,
              std::vector<TraversalEvent>& events) {
    std::size_t len = path.size() - 1;
    if (len > k_)
      throw std::logic_error("reposition path exceeds the pebble budget");
    max_reposition_len_ = std::max(max_reposition_len_, len);
    max_pebbles_ = std::max(max_pebbles_, pebbles);
    TraversalEvent ev;
    ev.kind = TraversalEvent::Kind::RepositionReal;
    ev.stage = stage;
    ev.path = std::move(path);
    events.push_back(std::move(ev));
  }

  void check_distance(VertexId vhead) const {
    // stage-end invariant: Euclidean distance between the robots < 2*sqrt(2)
    if (squared_distance(g_.points[pos_], vg_.verts[vhead].pos) >= 8)
      throw std::logic_error("robots drifted apart beyond 2*sqrt(2)");
  }

  const GeometricGraph& g_;
  const VirtualGraph& vg_;
  unsigned k_;
  VertexId pos_;
  std::vector<LatticeFace> squares_;
  std::size_t max_pebbles_ = 1;
  std::size_t max_reposition_len_ = 0;
};

void push_phase(std::vector<TraversalEvent>& events, Phase ph, std::uint64_t stage) {
  TraversalEvent ev;
  ev.kind = TraversalEvent::Kind::PhaseMark;
  ev.stage = stage;
  ev.phase = ph;
  events.push_back(ev);
}

void push_move(std::vector<TraversalEvent>& events, const Arc& a, bool bounce,
               std::uint64_t stage) {
  TraversalEvent ev;
  ev.kind = TraversalEvent::Kind::MoveVirtual;
  ev.stage = stage;
  ev.move_tail = a.tail;
  ev.move_head = a.head;
  ev.bounce = bounce;
  events.push_back(ev);
}

}  // namespace

bool should_report_vertex(const VirtualGraph& vg, const Arc& e, const ReferencePoint& p) {
  if (!vg.is_real(e.head)) return false;  // hypothetical vertices stay silent
  Arc s = vg.rotation_succ(e);
  if (s == rev(e)) return true;  // single incident edge: the cone is the full plane
  return cone_contains(vg.verts[e.tail].pos, vg.verts[e.head].pos, vg.verts[s.head].pos,
                       p.p);
}

bool should_report_edge(const VirtualGraph& vg, const Arc& e, const ReferencePoint& p) {
  if (edge_kind_between(vg, e.tail, e.head) != EdgeKind::Graph) return false;
  const Point& t = vg.verts[e.tail].pos;
  const Point& h = vg.verts[e.head].pos;
  Rational dt = squared_distance(t, p.p);
  Rational dh = squared_distance(h, p.p);
  if (dt != dh) return dt < dh;
  Vec2 vt = p.p - t;
  Vec2 vh = p.p - h;
  if (vt.x != vh.x) return vt.x < vh.x;
  return vt.y < vh.y;
}

PreliminaryResult find_e_min(const GeometricGraph& g, const VirtualGraph& vg,
                             VertexId start, const PebbleBudget& budget) {
  WalkMap map = build_walk_map(vg, /*lattice_only=*/true);
  Shadow shadow(g, vg, budget.k, start);
  PreliminaryResult out;
  std::uint64_t stage = 0;

  push_phase(out.events, Phase::Preliminary, stage);

  // Stage 0: the lower arc of the start square pointing away from its
  // corner; the walk immediately reverses it (the square lies to the right
  // of the reversed arc) and rounds the face structure of L_G from there.
  LatticeFace s0 = square_of(g.points[start]);
  VertexId c00 = vg.lattice_vertex(s0.cx, s0.cy);
  VertexId c10 = vg.lattice_vertex(s0.cx + 1, s0.cy);
  std::uint32_t a0 = map.arc_of(c00, c10);

  auto move_to = [&](std::uint32_t arc, bool bounce) {
    ++stage;
    push_move(out.events, map.as_arc(arc), bounce, stage);
    shadow.follow(map.as_arc(arc), map.edge_of[arc], stage, out.events);
  };

  move_to(a0, false);
  std::uint32_t current = map.arc_rev[a0];
  move_to(current, true);
  const std::uint32_t cycle_start = current;

  // Track the minimum lattice edge while walking the whole cycle (every arc
  // of L_G exactly once), then keep walking until the virtual robot stands
  // on the minimum arc directed out of its smaller endpoint.
  std::uint32_t min_edge = map.edge_of[current];
  const std::uint64_t cap = 8 * static_cast<std::uint64_t>(map.n_arcs) + 16;
  std::uint64_t iters = 0;
  bool cycle_closed = false;
  while (true) {
    if (++iters > cap) throw std::logic_error("preliminary walk exceeded its cap");
    std::uint32_t b = map.arc_succ[current];
    move_to(b, false);
    std::uint32_t ei = map.edge_of[b];
    if (arc_key_less(arc_key(vg, vg.edges[ei].u, vg.edges[ei].v),
                     arc_key(vg, vg.edges[min_edge].u, vg.edges[min_edge].v)))
      min_edge = ei;
    if (map.link[ei]) {
      current = map.arc_rev[b];
      move_to(current, true);
    } else {
      current = b;
    }
    if (!cycle_closed && current == cycle_start) cycle_closed = true;
    if (cycle_closed && current == map.emin_arc) break;
  }
  if (min_edge != map.emin_edge)
    throw std::logic_error("tracked minimum disagrees with the global minimum edge");

  out.e_min = map.as_arc(map.emin_arc);
  out.real_position = shadow.position();
  out.stages = stage;
  out.max_pebbles = shadow.max_pebbles();
  out.max_reposition_len = shadow.max_reposition_len();
  return out;
}

TraversalRun traverse_enumerate(const GeometricGraph& g, VertexId start) {
  if (g.order() == 0) raise(Errc::TooSmall, "cannot traverse the empty graph");
  if (!is_connected(g)) raise(Errc::Disconnected, "traversal needs a connected graph");

  // Repair general position if needed; a common translation keeps the edge
  // set and rotation system intact.
  TraversalRun run;
  run.points = ensure_general_position(g.points, /*seed=*/0xb0d07ull);
  const GeometricGraph* gp = &g;
  GeometricGraph repaired;
  if (run.points != g.points) {
    std::vector<WeightAssignment> ws;
    for (const auto& [key, w] : g.weights) ws.push_back({key.first, key.second, w});
    repaired = build_unit_disk_graph(run.points, ws);
    gp = &repaired;
  }
  const GeometricGraph& gg = *gp;

  run.budget = gg.order() == 1 ? PebbleBudget{1, 2} : compute_pebble_budget(gg);
  VirtualGraph vg = build_virtual(gg);

  PreliminaryResult prelim = find_e_min(gg, vg, start, run.budget);
  run.events = std::move(prelim.events);
  std::uint64_t stage = prelim.stages;

  const Point& left = vg.verts[prelim.e_min.tail].pos;
  run.reference = ReferencePoint{Point{left.x, left.y - 1}};

  WalkMap map = build_walk_map(vg, /*lattice_only=*/false);
  if (map.as_arc(map.emin_arc) != prelim.e_min)
    throw std::logic_error("preliminary and traversal phases disagree on e_min");

  Shadow shadow(gg, vg, run.budget.k, prelim.real_position);
  push_phase(run.events, Phase::Traversal, stage);

  auto move_to = [&](std::uint32_t arc, bool bounce) {
    ++stage;
    push_move(run.events, map.as_arc(arc), bounce, stage);
    shadow.follow(map.as_arc(arc), map.edge_of[arc], stage, run.events);
  };

  std::uint32_t current = map.emin_arc;
  std::uint64_t advances = 0;
  const std::uint64_t cap = 8 * static_cast<std::uint64_t>(map.n_arcs) + 16;
  do {
    std::uint32_t b = map.arc_succ[current];
    if (++advances > cap) throw std::logic_error("traversal walk exceeded its cap");
    move_to(b, false);
    Arc ab = map.as_arc(b);

    if (should_report_vertex(vg, ab, run.reference)) {
      TraversalEvent ev;
      ev.kind = TraversalEvent::Kind::ReportVertex;
      ev.stage = stage;
      ev.vertex = ab.head;
      run.events.push_back(ev);
      ++run.reported_vertices;
      // every crossing edge hangs off its lexicographically smaller endpoint
      for (VertexId w : vg.crossing_adj[ab.head]) {
        if (lex_less(vg.verts[ab.head].pos, vg.verts[w].pos)) {
          TraversalEvent ce;
          ce.kind = TraversalEvent::Kind::ReportEdge;
          ce.stage = stage;
          ce.edge_u = std::min(ab.head, w);
          ce.edge_v = std::max(ab.head, w);
          ce.via_crossing = true;
          run.events.push_back(ce);
          ++run.reported_edges;
        }
      }
    }
    if (should_report_edge(vg, ab, run.reference)) {
      TraversalEvent ev;
      ev.kind = TraversalEvent::Kind::ReportEdge;
      ev.stage = stage;
      ev.edge_u = std::min(ab.tail, ab.head);
      ev.edge_v = std::max(ab.tail, ab.head);
      ev.via_crossing = false;
      run.events.push_back(ev);
      ++run.reported_edges;
    }

    if (map.link[map.edge_of[b]]) {
      current = map.arc_rev[b];
      move_to(current, true);
    } else {
      current = b;
    }
  } while (current != map.emin_arc);

  if (advances != map.n_arcs)
    throw std::logic_error("traversal walk did not cover every arc exactly once");

  run.stages = stage;
  run.max_pebbles = std::max(prelim.max_pebbles, shadow.max_pebbles());
  run.max_reposition_len =
      std::max(prelim.max_reposition_len, shadow.max_reposition_len());
  return run;
}

}  // namespace boxdot
