#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "arcsys/pillowcase.hpp"
#include "arcsys/system.hpp"

namespace arcsys {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool none() const;
  std::size_t count() const;
  std::size_t size() const { return n_; }
  Bitset operator&(const Bitset& o) const;
  Bitset operator|(const Bitset& o) const;
  Bitset and_not(const Bitset& o) const;
  std::size_t and_count(const Bitset& o) const;
  // Calls f(i) for each set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t word = w_[k];
      while (word) {
        int b = __builtin_ctzll(word);
        f(k * 64 + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct CompatibilityGraph {
  int k = 0;
  std::vector<ArcClass> vertices;
  std::vector<Bitset> adjacency;  // x ~ y iff x != y and intersect(x, y) <= k

  std::size_t size() const { return adjacency.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }
  std::size_t edge_count() const;
};

CompatibilityGraph build_graph(const std::vector<ArcClass>& universe, int k);
// Graph from an explicit adjacency predicate (used by the subsurface models).
CompatibilityGraph graph_from_matrix(std::size_t n, const std::vector<std::vector<bool>>& adjacent);

struct CliqueOptions {
  std::optional<std::size_t> size_filter;
  std::uint64_t node_budget = 200'000'000;
};

// All inclusion-maximal cliques as sorted index lists, sorted
// lexicographically. Throws ResourceLimitError past the node budget.
std::vector<std::vector<std::size_t>> maximal_cliques(const CompatibilityGraph& g, const CliqueOptions& opt = {});

struct SearchResult {
  int k = 0;
  int bound = 0;
  int check_bound = 0;
  std::map<std::size_t, std::size_t> clique_sizes;  // all maximal cliques at the bound
  std::size_t unsaturated = 0;                      // extended by an arc up to check_bound
  std::size_t below_target = 0;                     // saturated but smaller than 12 (k = 1)
  std::vector<ArcSystem> systems;
};

// k = 0: every maximal clique still saturated at check_bound.
// k = 1: those of them with 12 arcs.
SearchResult find_systems(int k, int n, int n_check, std::uint64_t node_budget = CliqueOptions{}.node_budget);

struct ShellMargin {
  int m = 0;
  // min over shell arcs of (max over members of intersect) - k
  int min_excess = 0;
  std::optional<ArcClass> extension;
};

struct SaturationEvidence {
  std::vector<ShellMargin> shells;
  bool extended() const;
  bool monotone() const;
};

SaturationEvidence saturation_margin(const ArcSystem& s, int n, int n_prime);

}  // namespace arcsys
