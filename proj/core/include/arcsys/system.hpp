#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "arcsys/pillowcase.hpp"

namespace arcsys {

// A set of distinct arc classes, pairwise meeting at most k times.
class ArcSystem {
 public:
  ArcSystem() = default;
  // Sorts; throws DomainError on duplicates, k outside {0,1} or a pair
  // meeting more than k times.
  ArcSystem(std::vector<ArcClass> arcs, int k);
  // Skips validation; arcs must already be sorted, distinct and a k-system.
  struct Trusted {};
  ArcSystem(Trusted, std::vector<ArcClass> sorted_arcs, int k) : arcs_(std::move(sorted_arcs)), k_(k) {}

  const std::vector<ArcClass>& arcs() const { return arcs_; }
  int k() const { return k_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool contains(const ArcClass& x) const;

  friend bool operator==(const ArcSystem&, const ArcSystem&) = default;
  friend bool operator<(const ArcSystem& x, const ArcSystem& y) { return x.arcs_ < y.arcs_; }

 private:
  std::vector<ArcClass> arcs_;
  int k_ = 0;
};

bool is_k_system(const std::vector<ArcClass>& arcs, int k);

// Members disjoint from every other member.
std::vector<ArcClass> disjoint_subset(const std::vector<ArcClass>& arcs);

// Incidences at a, b, c, d (a loop adds 2 at its base).
std::array<int, 4> puncture_degrees(const std::vector<ArcClass>& arcs);

struct DegreeVector {
  std::array<int, 4> sorted{};  // descending
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
};
DegreeVector degree_vector(const std::vector<ArcClass>& arcs);
std::string to_string(const DegreeVector& d);

// Multigraph on {a,b,c,d}, one edge per arc, loops allowed.
struct PunctureGraph {
  std::vector<std::pair<Puncture, Puncture>> edges;
  bool has_cycle() const;
  int component_count() const;       // over vertices touched by an edge
  bool connected_on_touched() const; // component_count() <= 1
};
PunctureGraph puncture_graph(const std::vector<ArcClass>& arcs);

// True iff Gamma_J has a cycle; J must be pairwise disjoint.
bool is_separating(const std::vector<ArcClass>& j);

struct DualPair {
  std::array<Puncture, 2> q;
  std::array<Puncture, 2> q_star;
};
// ab|cd, ac|bd, ad|bc
const std::array<DualPair, 3>& dual_pairs();

struct DualPairCount {
  DualPair pair;
  int between_q = 0;
  int between_q_star = 0;
  // Between-Q / between-Q* arcs meeting once form a perfect matching.
  bool perfect_matching = false;
};
std::array<DualPairCount, 3> dual_pair_census(const std::vector<ArcClass>& arcs);

int loop_count(const std::vector<ArcClass>& arcs);

// True iff no arc of the universe outside the system keeps it a k-system.
bool is_saturated(const ArcSystem& s, const std::vector<ArcClass>& universe);
// First arc that would extend s, if any.
std::optional<ArcClass> find_extension(const ArcSystem& s, const std::vector<ArcClass>& candidates);

}  // namespace arcsys
