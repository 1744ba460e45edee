#include "boxdot/explorer.hpp"

#include "boxdot/errors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

namespace boxdot {

namespace {

// Incremental walk engine shared by explore, explore_until, and step.
// Tracks the pebbled path plus, per vertex, the number of pebbled
// neighbors, so the scan's skip test is O(deg) lookups at worst.
class Walker {
 public:
  Walker(const GeometricGraph& g, std::vector<VertexId> path, Arc e, Mode mode,
         unsigned k, Arc e0)
      : g_(g),
        pebbled_(g.order(), false),
        pebbled_nbrs_(g.order(), 0),
        path_(std::move(path)),
        current_(e),
        mode_(mode),
        k_(k),
        e0_(e0) {
    for (VertexId v : path_) add_pebble(v);
  }

  const std::vector<VertexId>& path() const { return path_; }
  const Arc& current() const { return current_; }
  Mode mode() const { return mode_; }

  ExplorationState state() const { return {path_, current_, mode_}; }

  // One state transition. Returns false on termination (backward-mode scan
  // landed on e0).
  bool advance() {
    if (mode_ == Mode::fw && path_.size() == k_ + 1) {
      // Budget full: retreat along the current arc.
      remove_pebble(current_.head);
      path_.pop_back();
      current_ = rev(current_);
      mode_ = Mode::bw;
      return true;
    }
    Arc landed = scan();
    if (mode_ == Mode::bw && landed == e0_) return false;
    if (pebbled_[landed.head]) {
      // All pebbles move off the frontier back onto the path.
      assert(path_.back() == landed.tail);
      remove_pebble(landed.tail);
      path_.pop_back();
      current_ = landed;
      mode_ = Mode::bw;
    } else {
      path_.push_back(landed.head);
      add_pebble(landed.head);
      current_ = landed;
      mode_ = Mode::fw;
    }
    assert(path_.back() == current_.head);
    return true;
  }

 private:
  // From succ(current), skip every arc whose head is an unpebbled vertex
  // adjacent to a pebbled vertex other than the frontier. rev(current) is
  // always a legal landing, so the loop stops within deg(frontier) steps.
  Arc scan() const {
    VertexId frontier = current_.head;
    Arc e = rotation_succ(g_, current_);
    while (true) {
      VertexId h = e.head;
      if (pebbled_[h]) return e;
      unsigned others = pebbled_nbrs_[h];
      if (others > 0 && g_.has_edge(h, frontier)) --others;
      if (others == 0) return e;
      e = next_around(g_, e);
    }
  }

  void add_pebble(VertexId v) {
    pebbled_[v] = true;
    for (VertexId w : g_.adjacency[v]) ++pebbled_nbrs_[w];
  }
  void remove_pebble(VertexId v) {
    pebbled_[v] = false;
    for (VertexId w : g_.adjacency[v]) --pebbled_nbrs_[w];
  }

  const GeometricGraph& g_;
  std::vector<bool> pebbled_;
  std::vector<unsigned> pebbled_nbrs_;
  std::vector<VertexId> path_;
  Arc current_;
  Mode mode_;
  unsigned k_;
  Arc e0_;
};

Arc first_arc(const GeometricGraph& g, VertexId v) {
  // Rotation lists start at the smallest counterclockwise angle from +x.
  return {v, g.adjacency[v][0]};
}

std::uint64_t default_cap(const GeometricGraph& g, unsigned k) {
  // 4 * #arcs * 2^(k+1), saturating; termination holds far below this.
  std::uint64_t arcs = 2 * static_cast<std::uint64_t>(g.edge_count());
  std::uint64_t cap = 4 * std::max<std::uint64_t>(arcs, 1);
  for (unsigned i = 0; i <= k && i < 50; ++i) {
    if (cap > std::numeric_limits<std::uint64_t>::max() / 2) break;
    cap *= 2;
  }
  return cap;
}

}  // namespace

ExplorationState initial_state(const GeometricGraph& g, VertexId v, unsigned k) {
  if (k < 1) raise(Errc::BadBudget, "exploration needs k >= 1");
  if (g.degree(v) == 0)
    raise(Errc::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
  Arc e0 = first_arc(g, v);
  return {{v, e0.head}, e0, Mode::fw};
}

std::optional<ExplorationState> step(const GeometricGraph& g, const ExplorationState& s,
                                     unsigned k, const Arc& e0) {
  Walker w(g, s.pebbled, s.current_arc, s.mode, k, e0);
  if (!w.advance()) return std::nullopt;
  return w.state();
}

ExplorationTrace explore(const GeometricGraph& g, VertexId v, unsigned k,
                         std::uint64_t max_iterations) {
  if (k < 1) raise(Errc::BadBudget, "exploration needs k >= 1");
  ExplorationTrace trace;
  if (g.degree(v) == 0) {
    trace.visited = {v};
    return trace;
  }
  if (max_iterations == 0) max_iterations = default_cap(g, k);

  ExplorationState init = initial_state(g, v, k);
  Walker w(g, init.pebbled, init.current_arc, init.mode, k, init.current_arc);
  std::vector<bool> seen(g.order(), false);
  seen[v] = true;
  seen[init.current_arc.head] = true;

  trace.states.push_back(w.state());
  trace.max_pebbled = w.path().size();
  std::uint64_t iter = 1;
  while (w.advance()) {
    if (++iter > max_iterations)
      throw std::logic_error("exploration exceeded its iteration cap");
    trace.states.push_back(w.state());
    trace.max_pebbled = std::max(trace.max_pebbled, w.path().size());
    seen[w.current().head] = true;
  }
  for (VertexId u = 0; u < g.order(); ++u)
    if (seen[u]) trace.visited.push_back(u);
  return trace;
}

std::optional<EarlyStopResult> explore_until(const GeometricGraph& g, VertexId v,
                                             unsigned k,
                                             const std::function<bool(VertexId)>& stop) {
  if (stop(v)) return EarlyStopResult{v, {v}, 1};
  if (g.degree(v) == 0) return std::nullopt;
  if (k < 1) raise(Errc::BadBudget, "exploration needs k >= 1");

  ExplorationState init = initial_state(g, v, k);
  Walker w(g, init.pebbled, init.current_arc, init.mode, k, init.current_arc);
  std::size_t max_pebbled = w.path().size();
  if (stop(init.current_arc.head))
    return EarlyStopResult{init.current_arc.head, w.path(), max_pebbled};

  std::uint64_t cap = default_cap(g, k);
  std::uint64_t iter = 1;
  while (w.advance()) {
    if (++iter > cap) throw std::logic_error("exploration exceeded its iteration cap");
    max_pebbled = std::max(max_pebbled, w.path().size());
    if (w.mode() == Mode::fw && stop(w.current().head))
      return EarlyStopResult{w.current().head, w.path(), max_pebbled};
  }
  return std::nullopt;
}

}  // namespace boxdot
