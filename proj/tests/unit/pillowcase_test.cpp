#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "arcsys/error.hpp"
#include "helpers.hpp"

using namespace arcsys;
using namespace arcsys::test;

TEST_SUITE("pillowcase") {

TEST_CASE("punctures round-trip through lattice points") {
  for (Puncture p : kPunctures) {
    CHECK(puncture_of(lattice_point(p)) == p);
    CHECK(parse_puncture(label_of(p)) == p);
  }
  CHECK_FALSE(parse_puncture('e').has_value());
}

TEST_CASE("universe at n=1") {
  auto u = arc_universe(ComplexityBound(1));
  std::map<Vec2, std::set<std::pair<Puncture, Puncture>>> pairs;
  int loops = 0;
  for (const auto& x : u) {
    if (x.is_loop()) {
      ++loops;
      continue;
    }
    pairs[x.vec].insert({x.first, x.second});
  }
  CHECK(u.size() == 24);
  CHECK(loops == 16);
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[Vec2{1, 0}] == std::set<std::pair<Puncture, Puncture>>{{A, B}, {C, D}});
  CHECK(pairs[Vec2{0, 1}] == std::set<std::pair<Puncture, Puncture>>{{A, C}, {B, D}});
  CHECK(pairs[Vec2{1, 1}] == std::set<std::pair<Puncture, Puncture>>{{A, D}, {B, C}});
  CHECK(pairs[Vec2{1, -1}] == std::set<std::pair<Puncture, Puncture>>{{A, D}, {B, C}});
}

TEST_CASE("universe is sorted, valid and grows by shells") {
  auto u6 = arc_universe(ComplexityBound(6));
  CHECK(u6.size() == 288);
  CHECK(std::is_sorted(u6.begin(), u6.end()));
  for (const auto& x : u6) CHECK_FALSE(validate(x).has_value());
  std::size_t shells = 0;
  for (int m = 1; m <= 6; ++m) {
    auto s = arc_shell(m);
    for (const auto& x : s) CHECK(x.complexity() == m);
    shells += s.size();
  }
  CHECK(shells == u6.size());
}

TEST_CASE("endpoints") {
  CHECK(endpoints(seg(A, B, 1, 0)) == std::array{A, B});
  CHECK(endpoints(loop(A, B, {1, 0})) == std::array{A, A});
  CHECK(endpoints(seg(A, D, 1, 3)) == std::array{A, D});
}

TEST_CASE("validation") {
  CHECK_FALSE(validate(ArcClass{ArcKind::segment, A, B, {1, 0}}).has_value());
  CHECK(validate(ArcClass{ArcKind::segment, A, B, {0, 1}}) == Violation::parity);
  CHECK(validate(ArcClass{ArcKind::segment, A, D, {2, 2}}) == Violation::primitivity);
  CHECK(validate(ArcClass{ArcKind::segment, A, B, {-1, 0}}) == Violation::sign_normalization);
  CHECK(validate(ArcClass{ArcKind::segment, A, A, {1, 0}}) == Violation::endpoints);
  CHECK_THROWS_AS(segment(A, B, {0, 1}), DomainError);
  CHECK_THROWS_AS(segment(A, D, {2, 2}), DomainError);
  CHECK_THROWS_AS(ComplexityBound(0), DomainError);
}

TEST_CASE("factories normalize") {
  auto x = segment(B, A, {-1, 0});
  CHECK(x.first == A);
  CHECK(x.second == B);
  CHECK(x.vec == Vec2{1, 0});
  auto l = loop(A, B, {-1, 0});
  CHECK(l.is_loop());
  CHECK(l.core() == seg(A, B, 1, 0));
  CHECK(to_string(seg(A, D, 1, -1)) == "ad(1,-1)");
}

}
