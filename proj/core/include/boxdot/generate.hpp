#pragma once

#include "boxdot/geograph.hpp"

#include <cstdint>
#include <vector>

namespace boxdot {

struct GenerateOptions {
  std::size_t n = 10;
  double density = 4.0;       // target expected degree
  std::uint64_t seed = 1;
  bool connected = false;     // resample until the unit-disk graph connects
  unsigned decimals = 4;      // coordinate precision
  unsigned max_retries = 500;
};

struct Instance {
  std::vector<Point> points;
  std::vector<WeightAssignment> weights;  // empty unless weights were assigned
};

/// Sample n points in a box sized for the requested expected degree,
/// post-processed by ensure_general_position. Fully determined by the
/// options (portable integer draws only).
/// Throws Error(GenerationExhausted) when --connected keeps failing.
Instance generate_instance(const GenerateOptions& opts);

/// Deterministic injective positive weights for every edge of g.
std::vector<WeightAssignment> assign_injective_weights(const GeometricGraph& g,
                                                       std::uint64_t seed);

}  // namespace boxdot
