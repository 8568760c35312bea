#include "arcsys/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "arcsys/error.hpp"
#include "arcsys/intersection.hpp"

namespace arcsys {

bool Bitset::none() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
  return c;
}

Bitset Bitset::operator&(const Bitset& o) const {
  Bitset r(*this);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
  return r;
}

Bitset Bitset::operator|(const Bitset& o) const {
  Bitset r(*this);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
  return r;
}

Bitset Bitset::and_not(const Bitset& o) const {
  Bitset r(*this);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
  return r;
}

std::size_t Bitset::and_count(const Bitset& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(__builtin_popcountll(w_[i] & o.w_[i]));
  return c;
}

std::size_t CompatibilityGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& row : adjacency) c += row.count();
  return c / 2;
}

CompatibilityGraph build_graph(const std::vector<ArcClass>& universe, int k) {
  CompatibilityGraph g;
  g.k = k;
  g.vertices = universe;
  const std::size_t n = universe.size();
  g.adjacency.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (universe[i] != universe[j] && intersect(universe[i], universe[j]) <= k) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
    }
  }
  return g;
}

CompatibilityGraph graph_from_matrix(std::size_t n, const std::vector<std::vector<bool>>& adjacent) {
  CompatibilityGraph g;
  g.adjacency.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && adjacent[i][j]) g.adjacency[i].set(j);
    }
  }
  return g;
}

namespace {

struct CliqueSearch {
  const CompatibilityGraph& g;
  const CliqueOptions& opt;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> r;
  std::vector<std::vector<std::size_t>> out;

  void run(Bitset p, Bitset x) {
    if (++nodes > opt.node_budget)
      throw ResourceLimitError("clique search exceeded node budget " + std::to_string(opt.node_budget));
    if (p.none()) {
      if (x.none() && (!opt.size_filter || *opt.size_filter == r.size())) {
        auto c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
      return;
    }
    // Tomita pivot: the vertex of P u X with most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    (p | x).for_each([&](std::size_t u) {
      std::size_t c = g.adjacency[u].and_count(p);
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    });
    Bitset cand = p.and_not(g.adjacency[pivot]);
    cand.for_each([&](std::size_t v) {
      r.push_back(v);
      run(p & g.adjacency[v], x & g.adjacency[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const CompatibilityGraph& g, const CliqueOptions& opt) {
  CliqueSearch s{g, opt, 0, {}, {}};
  Bitset p(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) p.set(i);
  if (g.size() == 0) return {};
  s.run(p, Bitset(g.size()));
  std::sort(s.out.begin(), s.out.end());
  return std::move(s.out);
}

SearchResult find_systems(int k, int n, int n_check, std::uint64_t node_budget) {
  if (k != 0 && k != 1) throw DomainError("k must be 0 or 1");
  if (n_check < n) throw DomainError("check bound must be >= bound");
  SearchResult res;
  res.k = k;
  res.bound = n;
  res.check_bound = n_check;
  CompatibilityGraph g = build_graph(arc_universe(ComplexityBound(n)), k);
  CliqueOptions opt;
  opt.node_budget = node_budget;
  auto cliques = maximal_cliques(g, opt);

  std::vector<ArcClass> outer;
  for (int m = n + 1; m <= n_check; ++m) {
    auto shell = arc_shell(m);
    outer.insert(outer.end(), shell.begin(), shell.end());
  }
  const std::size_t target = k == 0 ? 0 : 12;
  for (const auto& c : cliques) {
    ++res.clique_sizes[c.size()];
    std::vector<ArcClass> arcs;
    for (auto i : c) arcs.push_back(g.vertices[i]);
    ArcSystem s(std::move(arcs), k);
    if (find_extension(s, outer)) {
      ++res.unsaturated;
      continue;
    }
    if (target && s.size() != target) {
      ++res.below_target;
      continue;
    }
    res.systems.push_back(std::move(s));
  }
  std::sort(res.systems.begin(), res.systems.end());
  return res;
}

bool SaturationEvidence::extended() const {
  return std::any_of(shells.begin(), shells.end(), [](const ShellMargin& s) { return s.extension.has_value(); });
}

bool SaturationEvidence::monotone() const {
  for (std::size_t i = 1; i < shells.size(); ++i) {
    if (shells[i].min_excess < shells[i - 1].min_excess) return false;
  }
  return true;
}

SaturationEvidence saturation_margin(const ArcSystem& s, int n, int n_prime) {
  SaturationEvidence ev;
  for (int m = n + 1; m <= n_prime; ++m) {
    ShellMargin sm{m, std::numeric_limits<int>::max(), std::nullopt};
    for (const auto& c : arc_shell(m)) {
      if (s.contains(c)) continue;
      int worst = 0;
      for (const auto& x : s.arcs()) worst = std::max(worst, intersect(c, x));
      int excess = worst - s.k();
      if (excess < sm.min_excess) sm.min_excess = excess;
      if (excess <= 0 && !sm.extension) sm.extension = c;
    }
    ev.shells.push_back(sm);
  }
  return ev;
}

}  // namespace arcsys
