#include <doctest.h>

#include "arcsys/error.hpp"
#include "arcsys/intersection.hpp"
#include "arcsys/twist.hpp"
#include "helpers.hpp"

using namespace arcsys;
using namespace arcsys::test;

namespace {
OmegaArcClass om(OmegaFamily f, std::int64_t twice) { return omega_arc(f, HalfInt{twice}); }
}

TEST_SUITE("twist") {

TEST_CASE("tau_intersect examples") {
  CHECK(tau_intersect(om(OmegaFamily::a_b, 0), om(OmegaFamily::a_b, 2)) == 0);
  CHECK(tau_intersect(om(OmegaFamily::a_b, 0), om(OmegaFamily::d_c, 0)) == 0);
  CHECK(tau_intersect(om(OmegaFamily::a_b, 0), om(OmegaFamily::a_c, 1)) == 0);
  CHECK(tau_intersect(om(OmegaFamily::a_b, 0), om(OmegaFamily::a_b, 6)) == 2);
  CHECK_THROWS_AS(tau_intersect(om(OmegaFamily::a_b, 0), om(OmegaFamily::a_b, 0)), DomainError);
  CHECK_THROWS_AS(omega_arc(OmegaFamily::a_b, HalfInt{1}), DomainError);
}

TEST_CASE("embedding and twist") {
  CHECK(embed_omega(om(OmegaFamily::a_b, 0)) == seg(A, B, 1, 0));
  ArcClass v0 = embed_omega(om(OmegaFamily::a_b, 0));
  CHECK(embed_omega(om(OmegaFamily::a_b, 2)) == segment(A, B, omega_twist() * v0.vec));
  for (const auto& c : omega_cut()) CHECK(intersect(v0, c) == 0);
  CHECK(omega_coordinates(seg(A, B, 5, 4)) == om(OmegaFamily::a_b, 4));
  CHECK_FALSE(omega_coordinates(seg(A, D, 1, 1)).has_value());
  CHECK_THROWS_AS(embed_omega(om(OmegaFamily::a_b, 40), ComplexityBound(12)), DomainError);
}

TEST_CASE("twisting law under the embedding") {
  for (auto f1 : {OmegaFamily::a_b, OmegaFamily::a_c, OmegaFamily::d_b, OmegaFamily::d_c})
    for (auto f2 : {OmegaFamily::a_b, OmegaFamily::a_c, OmegaFamily::d_b, OmegaFamily::d_c})
      for (int t1 = -4; t1 <= 4; ++t1)
        for (int t2 = -4; t2 <= 4; ++t2) {
          if ((t1 % 2 == 0) != integral_family(f1) || (t2 % 2 == 0) != integral_family(f2)) continue;
          if (f1 == f2 && t1 == t2) continue;
          auto s1 = om(f1, t1), s2 = om(f2, t2);
          CHECK(tau_intersect(s1, s2) == intersect(embed_omega(s1), embed_omega(s2)));
        }
}

TEST_CASE("tau star") {
  ArcClass sigma = ad_arc(1);
  CHECK(sigma == seg(A, D, 3, 1));
  CHECK(tau_star(sigma).quarters == 1);
  CHECK(to_string(tau_star(sigma)) == "1/4");
  ArcClass turned = apply_symmetry(half_twist_bc(), sigma);
  CHECK(tau_star(turned).quarters == 3);
  CHECK(co_arcs(sigma, ComplexityBound(12)).size() == 4);
  CHECK_THROWS_AS(tau_star(seg(A, B, 1, 0)), DomainError);
}

TEST_CASE("reconciliation table") {
  auto r = reconcile_tau_star_formulas();
  CHECK(r.ad_bc.status == ReconciliationStatus::confirmed);
  CHECK(r.permissible_at_quarter == std::vector<HalfInt>{HalfInt{-1}, HalfInt{0}, HalfInt{1}, HalfInt{2}});
  CHECK_FALSE(r.ad_ad.rows.empty());
  CHECK(r.ad_ad.status != ReconciliationStatus::unresolved);
  // Rows against sigma with tau* = 1/4.
  bool saw_zero = false, saw_one = false;
  for (const auto& row : r.ad_bc.rows) {
    if (row.x != ad_arc(1)) continue;
    auto c = omega_coordinates(row.y);
    REQUIRE(c.has_value());
    CHECK(row.engine == row.formula);
    if (c->tau.twice == 0) saw_zero = row.engine == 0;
    if (c->tau.twice == 2) saw_one = row.engine == 1;
  }
  CHECK(saw_zero);
  CHECK(saw_one);
  // Adjacent tau* values.
  for (const auto& row : r.ad_ad.rows) {
    if (row.distance == Fraction{1, 2}) CHECK(row.formula == 2);
  }
}

}
