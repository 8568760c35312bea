#include <doctest.h>

#include <algorithm>

#include "arcsys/error.hpp"
#include "arcsys/subsurface.hpp"
#include "helpers.hpp"

using namespace arcsys;

namespace {
using Kind = PolygonArcClass::Kind;
}

TEST_SUITE("subsurface") {

TEST_CASE("polygon universes") {
  auto d3 = dn_universe(3, 3);
  auto loops = std::count_if(d3.begin(), d3.end(), [](const PolygonArcClass& x) { return x.is_loop(); });
  CHECK(loops == 3);
  CHECK(d3.size() - loops == 6);
  CHECK(dn_universe(1, 2).size() == 1);
  CHECK_THROWS_AS(dn_universe(5, 3), DomainError);
  CHECK_THROWS_AS(dn_universe(3, 1), DomainError);
}

TEST_CASE("polygon intersections") {
  PolygonArcClass loop0{3, Kind::vertex_vertex, 0, 3};
  PolygonArcClass loop1{3, Kind::vertex_vertex, 1, 3};
  PolygonArcClass ray1{3, Kind::vertex_puncture, 1, 0};
  PolygonArcClass around{3, Kind::vertex_vertex, 2, 2};
  CHECK(dn_intersect(loop0, around) == 2);
  CHECK(dn_intersect(loop0, ray1) == 1);
  // Distinct loops are boundary parallel at different vertices and cross twice.
  CHECK(dn_intersect(loop0, loop1) == 2);
  CHECK(dn_intersect(loop0, loop0) == 0);
  PolygonArcClass arc{3, Kind::vertex_vertex, 0, 2};
  CHECK(dn_intersect(arc, arc) == 0);
  CHECK(dn_intersect(arc, ray1) == 1);
}

TEST_CASE("polygon maxima") {
  const int expect[] = {1, 3, 6, 10};
  for (int n = 1; n <= 4; ++n) {
    auto r = dn_max_1_system(n);
    CHECK(r.max_size == expect[n - 1]);
    REQUIRE_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses) {
      CHECK(static_cast<int>(w.size()) == r.max_size);
      for (const auto& x : w)
        for (const auto& y : w) CHECK(dn_intersect(x, y) <= 1);
    }
  }
}

TEST_CASE("annulus families") {
  auto cls = omega_loopfree_max_systems();
  REQUIRE(cls.size() == 2);
  for (const auto& c : cls) {
    CHECK(c.representative.size() == 8);
    CHECK(omega_canonical(c.representative) == c.representative);
    for (std::size_t i = 0; i < c.representative.size(); ++i)
      for (std::size_t j = i + 1; j < c.representative.size(); ++j)
        CHECK(tau_intersect(c.representative[i], c.representative[j]) <= 1);
  }
  CHECK(cls[0].label != cls[1].label);
}

}
