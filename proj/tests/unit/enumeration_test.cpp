#include <doctest.h>

#include "arcsys/enumeration.hpp"
#include "arcsys/error.hpp"
#include "helpers.hpp"

using namespace arcsys;
using namespace arcsys::test;

TEST_SUITE("enumeration") {

TEST_CASE("bitset") {
  Bitset b(130);
  b.set(3);
  b.set(129);
  CHECK(b.count() == 2);
  CHECK(b.test(129));
  b.reset(3);
  std::vector<std::size_t> seen;
  b.for_each([&](std::size_t i) { seen.push_back(i); });
  CHECK(seen == std::vector<std::size_t>{129});
}

TEST_CASE("graphs at n=1") {
  auto u = arc_universe(ComplexityBound(1));
  auto g0 = build_graph(u, 0), g1 = build_graph(u, 1);
  std::vector<std::size_t> hv;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_loop() && (u[i].vec == Vec2{1, 0} || u[i].vec == Vec2{0, 1})) hv.push_back(i);
  REQUIRE(hv.size() == 4);
  for (auto i : hv)
    for (auto j : hv)
      if (i != j) CHECK(g0.adjacent(i, j));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (g0.adjacent(i, j)) CHECK(g1.adjacent(i, j));
  CHECK(g1.edge_count() >= g0.edge_count());
}

TEST_CASE("cliques of small graphs") {
  std::vector<std::vector<bool>> tri(3, std::vector<bool>(3, true));
  for (int i = 0; i < 3; ++i) tri[i][i] = false;
  auto c = maximal_cliques(graph_from_matrix(3, tri));
  CHECK(c == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  std::vector<std::vector<bool>> path{{false, true, false}, {true, false, true}, {false, true, false}};
  CHECK(maximal_cliques(graph_from_matrix(3, path)).size() == 2);
  CliqueOptions opt;
  opt.node_budget = 1;
  CHECK_THROWS_AS(maximal_cliques(build_graph(arc_universe(ComplexityBound(3)), 1), opt), ResourceLimitError);
}

TEST_CASE("zero systems at the acceptance bounds") {
  auto r = find_systems(0, 6, 12);
  REQUIRE_FALSE(r.systems.empty());
  for (const auto& s : r.systems) CHECK(s.size() == 6);
}

TEST_CASE("one systems at the acceptance bounds") {
  auto r = find_systems(1, 6, 12);
  REQUIRE_FALSE(r.systems.empty());
  for (const auto& s : r.systems) CHECK(s.size() == 12);
  CHECK(r.clique_sizes.rbegin()->first == 12);
  auto ev = saturation_margin(r.systems.front(), 6, 12);
  CHECK(ev.shells.size() == 6);
  CHECK_FALSE(ev.extended());
}

TEST_CASE("tiny universe has no maximal 1-system") {
  auto r = find_systems(1, 1, 1);
  CHECK(r.systems.empty());
}

TEST_CASE("a missing arc shows up in its own shell") {
  const ArcSystem& s = reference("J_3a");
  auto arcs = s.arcs();
  auto it = std::max_element(arcs.begin(), arcs.end(),
                             [](const ArcClass& x, const ArcClass& y) { return x.complexity() < y.complexity(); });
  int m = static_cast<int>(it->complexity());
  arcs.erase(it);
  auto ev = saturation_margin(ArcSystem(arcs, 1), m - 1, 12);
  REQUIRE_FALSE(ev.shells.empty());
  CHECK(ev.shells.front().m == m);
  CHECK(ev.shells.front().extension.has_value());
  CHECK(ev.extended());
}

}
