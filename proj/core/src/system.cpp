#include "arcsys/system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "arcsys/error.hpp"
#include "arcsys/intersection.hpp"

namespace arcsys {

ArcSystem::ArcSystem(std::vector<ArcClass> arcs, int k) : arcs_(std::move(arcs)), k_(k) {
  if (k != 0 && k != 1) throw DomainError("k must be 0 or 1");
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw DomainError("arc system contains a repeated class");
  for (const auto& x : arcs_) {
    if (auto v = validate(x)) throw DomainError("invalid arc " + to_string(x) + ": " + violation_name(*v));
  }
  if (!is_k_system(arcs_, k)) throw DomainError("arcs do not form a " + std::to_string(k) + "-system");
}

bool ArcSystem::contains(const ArcClass& x) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), x);
}

bool is_k_system(const std::vector<ArcClass>& arcs, int k) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[i] == arcs[j] || intersect(arcs[i], arcs[j]) > k) return false;
    }
  }
  return true;
}

std::vector<ArcClass> disjoint_subset(const std::vector<ArcClass>& arcs) {
  std::vector<ArcClass> out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    bool free = true;
    for (std::size_t j = 0; j < arcs.size() && free; ++j) {
      if (i != j && intersect(arcs[i], arcs[j]) != 0) free = false;
    }
    if (free) out.push_back(arcs[i]);
  }
  return out;
}

std::array<int, 4> puncture_degrees(const std::vector<ArcClass>& arcs) {
  std::array<int, 4> deg{};
  for (const auto& x : arcs) {
    for (Puncture p : endpoints(x)) ++deg[index_of(p)];
  }
  return deg;
}

DegreeVector degree_vector(const std::vector<ArcClass>& arcs) {
  DegreeVector d{puncture_degrees(arcs)};
  std::sort(d.sorted.begin(), d.sorted.end(), std::greater<>());
  return d;
}

std::string to_string(const DegreeVector& d) {
  std::ostringstream os;
  os << '(' << d.sorted[0] << ',' << d.sorted[1] << ',' << d.sorted[2] << ',' << d.sorted[3] << ')';
  return os.str();
}

PunctureGraph puncture_graph(const std::vector<ArcClass>& arcs) {
  PunctureGraph g;
  for (const auto& x : arcs) {
    auto e = endpoints(x);
    g.edges.emplace_back(e[0], e[1]);
  }
  return g;
}

namespace {

struct Dsu {
  std::array<int, 4> parent{0, 1, 2, 3};
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

bool PunctureGraph::has_cycle() const {
  Dsu dsu;
  for (auto [p, q] : edges) {
    if (!dsu.unite(index_of(p), index_of(q))) return true;
  }
  return false;
}

int PunctureGraph::component_count() const {
  Dsu dsu;
  std::array<bool, 4> touched{};
  for (auto [p, q] : edges) {
    touched[index_of(p)] = touched[index_of(q)] = true;
    dsu.unite(index_of(p), index_of(q));
  }
  int count = 0;
  for (int i = 0; i < 4; ++i) {
    if (touched[i] && dsu.find(i) == i) ++count;
  }
  return count;
}

bool PunctureGraph::connected_on_touched() const { return component_count() <= 1; }

bool is_separating(const std::vector<ArcClass>& j) { return puncture_graph(j).has_cycle(); }

const std::array<DualPair, 3>& dual_pairs() {
  using P = Puncture;
  static const std::array<DualPair, 3> pairs{{{{P::a, P::b}, {P::c, P::d}},
                                              {{P::a, P::c}, {P::b, P::d}},
                                              {{P::a, P::d}, {P::b, P::c}}}};
  return pairs;
}

namespace {

bool joins(const ArcClass& x, const std::array<Puncture, 2>& pr) {
  return !x.is_loop() && x.first == std::min(pr[0], pr[1]) && x.second == std::max(pr[0], pr[1]);
}

}  // namespace

std::array<DualPairCount, 3> dual_pair_census(const std::vector<ArcClass>& arcs) {
  std::array<DualPairCount, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const DualPair& dp = dual_pairs()[i];
    std::vector<ArcClass> qs, qss;
    for (const auto& x : arcs) {
      if (joins(x, dp.q)) qs.push_back(x);
      if (joins(x, dp.q_star)) qss.push_back(x);
    }
    bool matching = !qs.empty() && qs.size() == qss.size();
    for (const auto& y : qss) {
      int hits = 0;
      for (const auto& x : qs) {
        int c = intersect(x, y);
        if (c == 1) ++hits;
        else if (c != 0) matching = false;
      }
      if (hits != 1) matching = false;
    }
    for (const auto& x : qs) {
      int hits = 0;
      for (const auto& y : qss) hits += intersect(x, y) == 1;
      if (hits != 1) matching = false;
    }
    out[i] = {dp, static_cast<int>(qs.size()), static_cast<int>(qss.size()), matching};
  }
  return out;
}

int loop_count(const std::vector<ArcClass>& arcs) {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [](const ArcClass& x) { return x.is_loop(); }));
}

std::optional<ArcClass> find_extension(const ArcSystem& s, const std::vector<ArcClass>& candidates) {
  for (const auto& c : candidates) {
    if (s.contains(c)) continue;
    bool ok = std::all_of(s.arcs().begin(), s.arcs().end(),
                          [&](const ArcClass& x) { return intersect(c, x) <= s.k(); });
    if (ok) return c;
  }
  return std::nullopt;
}

bool is_saturated(const ArcSystem& s, const std::vector<ArcClass>& universe) {
  return !find_extension(s, universe).has_value();
}

}  // namespace arcsys
