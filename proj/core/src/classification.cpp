#include "arcsys/classification.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "arcsys/error.hpp"
#include "arcsys/intersection.hpp"

namespace arcsys {

std::int64_t total_complexity(const std::vector<ArcClass>& arcs) {
  std::int64_t t = 0;
  for (const auto& x : arcs) t += x.complexity();
  return t;
}

namespace {

// r u + s v = 1 for primitive (u, v).
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t u, std::int64_t v) {
  std::int64_t r0 = u, r1 = v, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  return {s0, t0};
}

// Linear map with det 1 sending w to (1, 0).
Mat2 to_horizontal(Vec2 w) {
  auto [r, s] = bezout(w.u, w.v);
  return {r, s, -w.v, w.u};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Best {
  bool have = false;
  std::int64_t weight = 0;
  std::vector<ArcClass> arcs;
  SymmetryElement witness;
};

void consider(const std::vector<ArcClass>& arcs, const Mat2& m, Best& best) {
  std::int64_t weight = 0;
  for (const auto& x : arcs) weight += complexity(m * x.vec);
  if (best.have && weight > best.weight) return;
  for (int t = 0; t < 4; ++t) {
    SymmetryElement g{m, {t & 1, t >> 1}};
    std::vector<ArcClass> img = apply_symmetry(g, arcs);
    std::sort(img.begin(), img.end());
    if (!best.have || weight < best.weight || img < best.arcs) {
      best.have = true;
      best.weight = weight;
      best.arcs = std::move(img);
      best.witness = g;
    }
  }
}

}  // namespace

Canonical canonicalize_with_witness(const ArcSystem& s) {
  const auto& arcs = s.arcs();
  if (arcs.empty()) return {s, identity_symmetry()};
  Best best;
  bool any_pair = false;
  for (const auto& x : arcs) {
    Mat2 a = to_horizontal(x.vec);
    for (const auto& y : arcs) {
      if (det(x.vec, y.vec) == 0) continue;
      any_pair = true;
      Vec2 img = a * y.vec;  // (p, q) with q = det(w_x, w_y) != 0
      for (std::int64_t e : {1, -1}) {
        // Stabiliser element [[1,k],[0,e]] takes (p,q) to (p + kq, eq); pick
        // k with 0 <= s (p + kq) < |q|, s = sign(eq). The rule is unchanged
        // when (p,q) flips sign, so it does not depend on representatives.
        std::int64_t sg = (e * img.v > 0) ? 1 : -1;
        std::int64_t big_p = sg * img.u, big_s = sg * img.v;
        std::int64_t k = big_s > 0 ? -floor_div(big_p, big_s) : floor_div(big_p, -big_s);
        Mat2 m = Mat2{1, k, 0, e} * a;
        consider(arcs, m, best);
      }
    }
  }
  if (!any_pair) {
    Mat2 a = to_horizontal(arcs.front().vec);
    for (std::int64_t e : {1, -1}) consider(arcs, Mat2{1, 0, 0, e} * a, best);
  }
  return {ArcSystem(ArcSystem::Trusted{}, std::move(best.arcs), s.k()), best.witness};
}

ArcSystem canonicalize(const ArcSystem& s) { return canonicalize_with_witness(s).system; }

Fingerprint fingerprint(const ArcSystem& s) {
  Fingerprint f;
  auto j = disjoint_subset(s.arcs());
  f.j_size = static_cast<int>(j.size());
  f.system_degrees = degree_vector(s.arcs());
  f.j_degrees = degree_vector(j);
  f.loop_count = loop_count(s.arcs());
  std::vector<ArcClass> nonloops;
  for (const auto& x : s.arcs()) {
    if (!x.is_loop()) nonloops.push_back(x);
  }
  f.nonloop_degrees = degree_vector(nonloops);
  f.j_components = puncture_graph(j).component_count();
  return f;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << "|J|=" << f.j_size << " deg=" << to_string(f.system_degrees) << " degJ=" << to_string(f.j_degrees)
     << " loops=" << f.loop_count << " nonloop=" << to_string(f.nonloop_degrees)
     << " J-components=" << f.j_components;
  return os.str();
}

std::vector<OrbitClass> classify(const std::vector<ArcSystem>& systems) {
  std::map<ArcSystem, std::size_t> counts;
  for (const auto& s : systems) ++counts[canonicalize(s)];
  std::vector<OrbitClass> out;
  for (auto& [rep, n] : counts) out.push_back({rep, fingerprint(rep), n, {}});
  return out;
}

void match_labels(std::vector<OrbitClass>& classes) {
  auto deg = [](int a, int b, int c, int d) { return DegreeVector{{a, b, c, d}}; };
  for (auto& c : classes) {
    const Fingerprint& f = c.fingerprint;
    if (c.representative.k() != 1 || c.representative.size() != 12) continue;
    switch (f.j_size) {
      case 3:
        if (f.j_degrees == deg(2, 2, 1, 1)) c.label = "J_3a";
        if (f.j_degrees == deg(3, 1, 1, 1)) c.label = "J_3b";
        break;
      case 2:
        if (f.j_components == 1) {
          if (f.system_degrees == deg(10, 6, 4, 4)) c.label = "J_2a";
          if (f.system_degrees == deg(10, 5, 5, 4)) c.label = "J_2b";
        } else {
          if (f.nonloop_degrees == deg(5, 5, 5, 5)) c.label = "J_2e";
          if (f.nonloop_degrees == deg(6, 6, 4, 4)) c.label = "J_2c/J_2d";
        }
        break;
      case 1: c.label = "J_1"; break;
      case 0: c.label = "J_0"; break;
      default: break;
    }
  }
}

std::size_t match_reference_labels(std::vector<OrbitClass>& classes,
                                   const std::vector<std::pair<ArcSystem, std::string>>& references) {
  std::map<ArcSystem, std::string> by_form;
  for (const auto& [s, label] : references) by_form.emplace(canonicalize(s), label);
  std::size_t n = 0;
  for (auto& c : classes) {
    auto it = by_form.find(c.representative);
    if (it != by_form.end() && !it->second.empty()) {
      c.label = it->second;
      ++n;
    }
  }
  return n;
}

}  // namespace arcsys
