#include <doctest.h>

#include <random>
#include <set>

#include "arcsys/classification.hpp"
#include "arcsys/enumeration.hpp"
#include "arcsys/error.hpp"
#include "helpers.hpp"

using namespace arcsys;
using namespace arcsys::test;

TEST_SUITE("classification") {

TEST_CASE("puncture action") {
  CHECK(puncture_action(identity_symmetry()) == std::array{A, B, C, D});
  CHECK(puncture_action(make_symmetry({0, 1, 1, 0})) == std::array{A, C, B, D});
  CHECK(puncture_action(make_symmetry({}, {1, 1})) == std::array{D, C, B, A});
  CHECK_THROWS_AS(make_symmetry({2, 0, 0, 1}), DomainError);
}

TEST_CASE("arc action") {
  auto x = seg(A, D, 1, 3);
  CHECK(apply_symmetry(identity_symmetry(), x) == x);
  auto shift = make_symmetry({}, {1, 0});
  CHECK(apply_symmetry(shift, seg(A, B, 1, 0)) == seg(A, B, 1, 0));
  CHECK(apply_symmetry(shift, seg(A, C, 0, 1)) == seg(B, D, 0, 1));
  CHECK(apply_symmetry(shift, loop(A, B, {1, 0})) == loop(B, A, {1, 0}));
}

TEST_CASE("words") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Word w;
    for (int i = 0; i < 6; ++i)
      w.push_back({static_cast<int>(rng() % generators().size()), static_cast<int>(rng() % 5) - 2});
    SymmetryElement g = evaluate(w);
    CHECK(evaluate(decompose(g)) == g);
    CHECK(g * inverse(g) == identity_symmetry());
  }
}

TEST_CASE("canonical form is an orbit invariant") {
  std::mt19937 rng(11);
  for (const auto& r : references()) {
    ArcSystem c = canonicalize(r.system);
    CHECK(canonicalize(c) == c);
    auto cw = canonicalize_with_witness(r.system);
    auto img = apply_symmetry(cw.witness, r.system.arcs());
    CHECK(ArcSystem(img, r.system.k()) == cw.system);
    for (int trial = 0; trial < 4; ++trial) {
      Word w;
      for (int i = 0; i < 4; ++i)
        w.push_back({static_cast<int>(rng() % generators().size()), static_cast<int>(rng() % 3) - 1});
      ArcSystem moved(apply_symmetry(evaluate(w), r.system.arcs()), r.system.k());
      CHECK(canonicalize(moved) == c);
      CHECK(fingerprint(moved) == fingerprint(r.system));
    }
  }
}

TEST_CASE("zero-system classes") {
  auto classes = classify(find_systems(0, 6, 12).systems);
  CHECK(classes.size() == 6);
  std::set<DegreeVector> degrees;
  for (const auto& c : classes) degrees.insert(c.fingerprint.system_degrees);
  CHECK(degrees.size() == 6);
  std::vector<std::pair<ArcSystem, std::string>> labelled;
  for (const auto& r : references())
    if (r.system.k() == 0) labelled.emplace_back(r.system, r.label);
  CHECK(match_reference_labels(classes, labelled) == 6);
}

TEST_CASE("one-system classes") {
  auto classes = classify(find_systems(1, 6, 12).systems);
  REQUIRE(classes.size() == 9);
  std::multiset<int> jsizes;
  std::set<DegreeVector> trees;
  for (const auto& c : classes) {
    jsizes.insert(c.fingerprint.j_size);
    if (c.fingerprint.j_size == 3) trees.insert(c.fingerprint.j_degrees);
  }
  CHECK(jsizes == std::multiset<int>{3, 3, 2, 2, 2, 2, 2, 1, 0});
  CHECK(trees == std::set<DegreeVector>{{{2, 2, 1, 1}}, {{3, 1, 1, 1}}});
  match_labels(classes);
  for (const auto& c : classes) {
    if (c.fingerprint.system_degrees == DegreeVector{{10, 6, 4, 4}}) CHECK(c.label == "J_2a");
    if (c.fingerprint.j_size == 0) CHECK(c.label == "J_0");
    if (c.fingerprint.j_size == 1) CHECK(c.label == "J_1");
    CHECK_FALSE(c.label.empty());
  }
}

}
