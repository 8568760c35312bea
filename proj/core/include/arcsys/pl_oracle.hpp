#pragma once

// Crossing count from explicit polylines on the torus R^2/Z^2.
//
// A segment of slope w from p lifts to the closed geodesic p~ -> p~ + w, which
// double covers the arc. A loop based at p around q lifts to the two boundary
// strands of a thin strip around p~ -> p~ + w: each strand leaves p~ in a short
// fan, runs parallel at offset +-eps, and returns to p~ + w. The torus count is
// twice the pillowcase count. Coordinates are scaled to integers and all
// orientation tests use 128-bit products.

#include <cstdint>

#include "arcsys/pillowcase.hpp"

namespace arcsys {

struct OracleParams {
  // Multipliers applied to the default fan length and strip width
  // denominators; different values give different representatives.
  std::int64_t fan_scale = 1;
  std::int64_t strip_scale = 1;
};

// Throws std::logic_error if the configuration stays degenerate after retries
// or the torus count is odd.
int pl_crossings(const ArcClass& x, const ArcClass& y, OracleParams params = {});

}  // namespace arcsys
