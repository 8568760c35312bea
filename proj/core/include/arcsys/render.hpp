#pragma once

#include <string>
#include <vector>

#include "arcsys/system.hpp"

namespace arcsys {

enum class View { pillowcase, disk };

struct RenderItem {
  std::string title;
  ArcSystem system;
};

// One SVG with a panel per item. Arcs of the disjoint subset J are black,
// the rest coloured. An empty item list still yields one panel with the four
// punctures.
//   pillowcase: the fundamental rectangle [0,1] x [0,1/2], front face on the
//               left half, back face on the right half
//   disk:       the sphere mapped by a Weierstrass-type function with d sent
//               to the boundary circle and a to the centre
std::string render_svg(const std::vector<RenderItem>& items, View view);

}  // namespace arcsys
