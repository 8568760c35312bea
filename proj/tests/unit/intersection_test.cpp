#include <doctest.h>

#include "arcsys/intersection.hpp"
#include "arcsys/pl_oracle.hpp"
#include "helpers.hpp"

using namespace arcsys;
using namespace arcsys::test;

TEST_SUITE("intersection") {

TEST_CASE("shared endpoints") {
  CHECK(shared_endpoints(seg(A, B, 1, 0), seg(A, C, 0, 1)) == 1);
  CHECK(shared_endpoints(seg(A, B, 1, 0), seg(A, B, 1, 2)) == 2);
  CHECK(shared_endpoints(seg(A, B, 1, 0), seg(C, D, 1, 0)) == 0);
  CHECK(shared_endpoints(loop(A, B, {1, 0}), loop(A, C, {0, 1})) == 2);
}

TEST_CASE("closed form examples") {
  CHECK(intersect(seg(A, D, 1, 1), seg(A, D, 1, -1)) == 0);
  CHECK(intersect(seg(A, D, 1, -1), seg(A, D, 1, 3)) == 1);
  for (int k = 1; k <= 5; ++k) {
    CHECK(intersect(seg(A, B, 1, 0), seg(A, B, 1, 2 * k)) == k - 1);
    CHECK(intersect(seg(A, B, 1, 0), seg(A, B, 1, -2 * k)) == k - 1);
  }
  auto x = seg(A, C, 2, 5);
  CHECK(intersect(x, x) == 0);
}

TEST_CASE("oracle examples") {
  auto l = loop(A, B, {1, 0});
  CHECK(oracle_intersect(l, seg(A, B, 1, 0)) == 0);
  CHECK(oracle_intersect(l, seg(C, D, 1, 0)) == 0);
  CHECK(oracle_intersect(l, l) == 0);
  CHECK(oracle_intersect(seg(A, D, 1, -1), seg(A, D, 1, 3)) == 1);
}

TEST_CASE("closed form matches the oracle at n=3") {
  auto u = arc_universe(ComplexityBound(3));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i; j < u.size(); ++j) {
      CAPTURE(to_string(u[i]));
      CAPTURE(to_string(u[j]));
      CHECK(intersect(u[i], u[j]) == oracle_intersect(u[i], u[j]));
      CHECK(intersect(u[i], u[j]) == intersect(u[j], u[i]));
    }
}

TEST_CASE("oracle is independent of the representative") {
  auto u = arc_universe(ComplexityBound(3));
  for (std::size_t i = 0; i < u.size(); i += 3)
    for (std::size_t j = i + 1; j < u.size(); j += 2)
      CHECK(pl_crossings(u[i], u[j], {1, 1}) == pl_crossings(u[i], u[j], {3, 2}));
}

TEST_CASE("fault hook corrupts only while enabled") {
  auto x = seg(A, B, 1, 0), y = seg(A, D, 1, 3);
  int clean = intersect(x, y);
  testing::set_closed_form_fault(true);
  CHECK(intersect(x, y) == clean + 1);
  testing::set_closed_form_fault(false);
  CHECK(intersect(x, y) == clean);
}

}
