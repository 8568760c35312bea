#include <doctest.h>

#include "arcsys/error.hpp"
#include "arcsys/subsurface.hpp"
#include "arcsys/system.hpp"
#include "helpers.hpp"

using namespace arcsys;
using namespace arcsys::test;

namespace {
std::vector<ArcClass> join_arc(std::vector<ArcClass> arcs, const ArcClass& x) {
  arcs.push_back(x);
  return arcs;
}
}

TEST_SUITE("system") {

TEST_CASE("k-system predicate") {
  CHECK(is_k_system({seg(A, D, 1, 1), seg(A, D, 1, -1)}, 0));
  CHECK_FALSE(is_k_system({seg(A, D, 1, -1), seg(A, D, 1, 3)}, 0));
  CHECK(is_k_system({seg(A, D, 1, -1), seg(A, D, 1, 3)}, 1));
  CHECK(is_k_system({}, 0));
  CHECK(is_k_system({}, 1));
}

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(ArcSystem({seg(A, B, 1, 0), seg(A, B, 1, 0)}, 0), DomainError);
  CHECK_THROWS_AS(ArcSystem({seg(A, D, 1, -1), seg(A, D, 1, 3)}, 0), DomainError);
  CHECK_THROWS_AS(ArcSystem({}, 2), DomainError);
  ArcSystem s({seg(C, D, 1, 0), seg(A, B, 1, 0)}, 0);
  CHECK(s.arcs().front() == seg(A, B, 1, 0));
  CHECK(s.contains(seg(C, D, 1, 0)));
}

TEST_CASE("disjoint subset") {
  for (const auto& r : references()) {
    if (r.system.k() == 0) CHECK(disjoint_subset(r.system.arcs()).size() == 6);
  }
  auto j3 = disjoint_subset(reference("J_3a").arcs());
  CHECK(j3.size() == 3);
  CHECK_FALSE(puncture_graph(j3).has_cycle());
  CHECK(disjoint_subset(reference("J_0").arcs()).empty());
}

TEST_CASE("degree vectors") {
  CHECK(degree_vector({seg(A, B, 1, 0)}) == DegreeVector{{1, 1, 0, 0}});
  CHECK(puncture_degrees({loop(A, B, {1, 0})}) == std::array{2, 0, 0, 0});
  std::map<std::string, DegreeVector> want{{"F", {{6, 6, 4, 4}}}, {"G", {{5, 5, 5, 5}}}};
  for (const auto& c : omega_loopfree_max_systems()) {
    std::vector<ArcClass> arcs{omega_cut()[0], omega_cut()[1]};
    for (const auto& s : c.representative) arcs.push_back(embed_omega(s));
    CHECK(degree_vector(arcs) == want[c.label]);
  }
}

TEST_CASE("separation") {
  CHECK(is_separating({seg(A, D, 1, 1), seg(A, D, 1, -1)}));
  CHECK_FALSE(is_separating({seg(A, B, 1, 0), seg(C, D, 1, 0)}));
  CHECK(is_separating({loop(A, B, {1, 0})}));
  CHECK_FALSE(is_separating({seg(A, B, 1, 0), seg(B, C, 1, 1), seg(C, D, 1, 0)}));
}

TEST_CASE("dual pair census") {
  for (const auto& c : dual_pair_census(reference("J_0").arcs())) {
    CHECK(c.between_q == 2);
    CHECK(c.between_q_star == 2);
    CHECK(c.perfect_matching);
  }
  auto single = dual_pair_census({seg(A, B, 1, 0)});
  CHECK(single[0].between_q == 1);
  CHECK(single[0].between_q_star == 0);
  CHECK(single[1].between_q + single[1].between_q_star + single[2].between_q + single[2].between_q_star == 0);
  for (const auto& c : dual_pair_census(reference("J_2a").arcs())) CHECK(c.between_q + c.between_q_star <= 4);
}

TEST_CASE("saturation") {
  const ArcSystem& s = reference("J_2b");
  CHECK(is_saturated(s, arc_universe(ComplexityBound(6))));
  CHECK(is_saturated(s, arc_universe(ComplexityBound(12))));
  auto arcs = s.arcs();
  ArcClass removed = arcs.back();
  arcs.pop_back();
  ArcSystem smaller(arcs, 1);
  CHECK_FALSE(is_saturated(smaller, arc_universe(ComplexityBound(12))));
  auto ext = find_extension(smaller, arc_universe(ComplexityBound(12)));
  REQUIRE(ext.has_value());
  CHECK(is_k_system(join_arc(arcs, *ext), 1));
  CHECK(is_k_system(join_arc(arcs, removed), 1));
  for (const auto& r : references())
    if (r.system.k() == 0) CHECK(is_saturated(r.system, arc_universe(ComplexityBound(12))));
}

}
