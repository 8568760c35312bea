#include "arcsys/subsurface.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "arcsys/enumeration.hpp"
#include "arcsys/error.hpp"

namespace arcsys {

std::string to_string(const PolygonArcClass& x) {
  std::ostringstream os;
  os << "D" << x.n << ":";
  if (x.kind == PolygonArcClass::Kind::vertex_puncture) {
    os << "v" << x.start << "->p";
  } else {
    os << "v" << x.start << "->v" << (x.start + x.span) % x.n << "[" << x.span << "]";
  }
  return os.str();
}

std::vector<PolygonArcClass> dn_universe(int n, int w_max) {
  if (n < 1 || n > 4) throw DomainError("polygon size must be in [1,4]");
  if (w_max < 2) throw DomainError("window must be >= 2");
  std::vector<PolygonArcClass> out;
  for (int x = 0; x < n; ++x) {
    out.push_back({n, PolygonArcClass::Kind::vertex_puncture, x, 0});
    // span 1 is a boundary edge; spans past n are not embedded.
    for (int d = 2; d <= std::min(n, w_max); ++d) out.push_back({n, PolygonArcClass::Kind::vertex_vertex, x, d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int dn_intersect(const PolygonArcClass& x, const PolygonArcClass& y) {
  if (x.n != y.n) throw DomainError("arcs live on different polygons");
  if (x == y) return 0;
  using K = PolygonArcClass::Kind;
  if (x.kind == K::vertex_puncture && y.kind == K::vertex_puncture) return 0;
  if (x.kind == K::vertex_puncture) return dn_intersect(y, x);
  const int n = x.n;
  const int x1 = x.start, x2 = x.start + x.span;
  int count = 0;
  for (int k = -3; k <= 3; ++k) {
    int off = k * n;
    if (y.kind == K::vertex_puncture) {
      int p = y.start + off;
      if (x1 < p && p < x2) ++count;
      continue;
    }
    int y1 = y.start + off, y2 = y.start + y.span + off;
    if ((x1 < y1 && y1 < x2 && x2 < y2) || (y1 < x1 && x1 < y2 && y2 < x2)) ++count;
  }
  return count;
}

namespace {

int max_clique(const std::vector<PolygonArcClass>& arcs, std::vector<std::vector<PolygonArcClass>>* witnesses) {
  const std::size_t m = arcs.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) adj[i][j] = i != j && dn_intersect(arcs[i], arcs[j]) <= 1;
  }
  auto cliques = maximal_cliques(graph_from_matrix(m, adj));
  std::size_t best = 0;
  for (const auto& c : cliques) best = std::max(best, c.size());
  if (witnesses) {
    for (const auto& c : cliques) {
      if (c.size() != best) continue;
      std::vector<PolygonArcClass> w;
      for (auto i : c) w.push_back(arcs[i]);
      witnesses->push_back(std::move(w));
    }
  }
  return static_cast<int>(best);
}

}  // namespace

PolygonMaxResult dn_max_1_system(int n) {
  PolygonMaxResult r;
  r.n = n;
  std::vector<int> by_window;
  for (int w = 2; w <= n + 1; ++w) by_window.push_back(max_clique(dn_universe(n, w), nullptr));
  r.stable_window = 2;
  for (int i = static_cast<int>(by_window.size()) - 1; i > 0; --i) {
    if (by_window[i - 1] != by_window.back()) {
      r.stable_window = i + 2;
      break;
    }
  }
  auto all = dn_universe(n, n + 1);
  r.max_size = max_clique(all, &r.witnesses);
  std::vector<PolygonArcClass> nonloop;
  std::copy_if(all.begin(), all.end(), std::back_inserter(nonloop), [](const auto& x) { return !x.is_loop(); });
  r.max_size_without_loops = max_clique(nonloop, nullptr);
  for (const auto& w : r.witnesses) {
    if (std::any_of(w.begin(), w.end(), [](const auto& x) { return x.is_loop(); })) r.max_size_with_loop = r.max_size;
  }
  return r;
}

std::vector<OmegaArcClass> omega_universe(HalfInt tau_max) {
  std::vector<OmegaArcClass> out;
  for (OmegaFamily f : {OmegaFamily::a_b, OmegaFamily::a_c, OmegaFamily::d_b, OmegaFamily::d_c}) {
    for (std::int64_t t = -tau_max.twice; t <= tau_max.twice; ++t) {
      if ((t % 2 == 0) == integral_family(f)) out.push_back({f, HalfInt{t}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

OmegaFamily family_of(Puncture lo, Puncture hi) {
  if (lo == Puncture::a) return hi == Puncture::b ? OmegaFamily::a_b : OmegaFamily::a_c;
  return hi == Puncture::b ? OmegaFamily::d_b : OmegaFamily::d_c;
}

bool is_bottom(Puncture p) { return p == Puncture::a || p == Puncture::d; }

// Label permutations preserving the partition {{a,d},{b,c}}.
std::vector<std::array<Puncture, 4>> annulus_permutations() {
  std::vector<std::array<Puncture, 4>> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    std::array<Puncture, 4> perm{puncture_at(p[0]), puncture_at(p[1]), puncture_at(p[2]), puncture_at(p[3])};
    if (is_bottom(perm[0]) == is_bottom(perm[3])) out.push_back(perm);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<OmegaArcClass> omega_canonical(const std::vector<OmegaArcClass>& family) {
  if (family.empty()) return {};
  std::vector<OmegaArcClass> best;
  for (const auto& perm : annulus_permutations()) {
    for (int sign : {1, -1}) {
      std::vector<OmegaArcClass> img;
      for (const auto& s : family) {
        Puncture p = perm[index_of(bottom(s.family))];
        Puncture q = perm[index_of(top(s.family))];
        if (!is_bottom(p)) std::swap(p, q);
        img.push_back({family_of(p, q), HalfInt{sign * s.tau.twice}});
      }
      std::int64_t lo = std::min_element(img.begin(), img.end(), [](const auto& x, const auto& y) {
                          return x.tau < y.tau;
                        })->tau.twice;
      for (std::int64_t shift : {-lo, -lo + 1}) {
        std::vector<OmegaArcClass> cand = img;
        bool ok = true;
        for (auto& s : cand) {
          s.tau.twice += shift;
          ok = ok && (s.tau.is_integer() == integral_family(s.family));
        }
        if (!ok) continue;
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = cand;
      }
    }
  }
  return best;
}

std::vector<OmegaSystemClass> omega_loopfree_max_systems() {
  auto arcs = omega_universe(HalfInt::integer(4));
  const std::size_t m = arcs.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) adj[i][j] = i != j && tau_intersect(arcs[i], arcs[j]) <= 1;
  }
  auto cliques = maximal_cliques(graph_from_matrix(m, adj));
  std::size_t best = 0;
  for (const auto& c : cliques) best = std::max(best, c.size());
  std::map<std::vector<OmegaArcClass>, std::size_t> classes;
  for (const auto& c : cliques) {
    if (c.size() != best) continue;
    std::vector<OmegaArcClass> fam;
    for (auto i : c) fam.push_back(arcs[i]);
    ++classes[omega_canonical(fam)];
  }
  std::vector<OmegaSystemClass> out;
  const auto cut = omega_cut();
  for (auto& [rep, count] : classes) {
    std::vector<ArcClass> arcs_in_sigma(cut.begin(), cut.end());
    for (const auto& s : rep) arcs_in_sigma.push_back(embed_omega(s));
    OmegaSystemClass c{rep, degree_vector(arcs_in_sigma), count, {}};
    if (c.degrees == DegreeVector{{6, 6, 4, 4}}) c.label = "F";
    if (c.degrees == DegreeVector{{5, 5, 5, 5}}) c.label = "G";
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace arcsys
