#include "boxdot/generate.hpp"

#include "boxdot/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace boxdot {

namespace {

// Rejection-free enough for our ranges; keeps draws portable across
// standard libraries (no std::uniform_*_distribution).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Instance generate_instance(const GenerateOptions& opts) {
  if (opts.n < 1) raise(Errc::BadInput, "need n >= 1");
  std::mt19937_64 rng(opts.seed);

  // Box side so that (n-1) * pi / side^2 is about the requested degree.
  double side = 1.0;
  if (opts.n > 1)
    side = std::max(1.0, std::sqrt(static_cast<double>(opts.n - 1) * 3.14159265358979 /
                                   std::max(0.1, opts.density)));
  BigInt scale = 1;
  for (unsigned d = 0; d < opts.decimals; ++d) scale *= 10;
  std::uint64_t span = static_cast<std::uint64_t>(side * std::pow(10.0, opts.decimals));
  if (span < 2) span = 2;

  for (unsigned attempt = 0; attempt <= opts.max_retries; ++attempt) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> used;
    std::vector<Point> pts;
    pts.reserve(opts.n);
    bool ok = true;
    for (std::size_t i = 0; i < opts.n; ++i) {
      std::pair<std::uint64_t, std::uint64_t> xy;
      int tries = 0;
      do {
        xy = {draw_below(rng, span), draw_below(rng, span)};
        if (++tries > 10000) {
          ok = false;
          break;
        }
      } while (used.count(xy));
      if (!ok) break;
      used.insert(xy);
      pts.push_back({Rational(BigInt(xy.first), scale), Rational(BigInt(xy.second), scale)});
    }
    if (!ok) continue;
    pts = ensure_general_position(pts, opts.seed ^ 0x9e3779b97f4a7c15ull);
    if (opts.connected) {
      GeometricGraph g = build_unit_disk_graph(pts);
      if (!is_connected(g)) continue;
    }
    return {std::move(pts), {}};
  }
  raise(Errc::GenerationExhausted, "no connected sample within the retry budget");
}

std::vector<WeightAssignment> assign_injective_weights(const GeometricGraph& g,
                                                       std::uint64_t seed) {
  auto edges = g.edges();
  std::vector<std::uint32_t> perm(edges.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i + 1);
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[draw_below(rng, i)]);
  std::vector<WeightAssignment> out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    out.push_back({edges[i].first, edges[i].second, Rational(perm[i], 4)});
  return out;
}

}  // namespace boxdot
