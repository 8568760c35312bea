// Builds the labelled reference systems from the constructions of the
// classification: trees completed in their hexagon, cut pairs completed by
// annulus families and loops, and the explicit J_1 and J_0 systems.
//
//   arcsys_refgen [output.json]    (stdout when no path is given)

#include <algorithm>
#include <array>
#include <iostream>
#include <map>
#include <set>

#include "arcsys/classification.hpp"
#include "arcsys/enumeration.hpp"
#include "arcsys/intersection.hpp"
#include "arcsys/records.hpp"
#include "arcsys/subsurface.hpp"
#include "arcsys/twist.hpp"

using namespace arcsys;

namespace {

constexpr int kSearchBound = 12;

const std::vector<ArcClass>& universe() {
  static const std::vector<ArcClass> u = arc_universe(ComplexityBound(kSearchBound));
  return u;
}

ArcClass seg(Puncture p, Puncture q, std::int64_t u, std::int64_t v) { return segment(p, q, {u, v}); }

std::vector<ArcClass> disjoint_from(const std::vector<ArcClass>& base) {
  std::vector<ArcClass> out;
  for (const auto& x : universe()) {
    if (std::find(base.begin(), base.end(), x) != base.end()) continue;
    if (std::all_of(base.begin(), base.end(), [&](const ArcClass& t) { return intersect(x, t) == 0; }))
      out.push_back(x);
  }
  return out;
}

std::vector<std::vector<ArcClass>> cliques_of(const std::vector<ArcClass>& arcs, int k, std::size_t size) {
  CliqueOptions opt;
  opt.size_filter = size;
  std::vector<std::vector<ArcClass>> out;
  for (const auto& c : maximal_cliques(build_graph(arcs, k), opt)) {
    std::vector<ArcClass> s;
    for (auto i : c) s.push_back(arcs[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ArcClass> join(std::vector<ArcClass> a, const std::vector<ArcClass>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Position of an arc end around its puncture. Directions through a cone
// point of angle pi are lines, so ends are ordered by the angle of their
// slope in [0, pi); the two ends of a loop sit just either side of its core
// slope.
struct EndAngle {
  Vec2 w;       // slope normalized to the upper half plane
  int side = 0; // -1 / +1 for loop ends, 0 otherwise
};

Vec2 upper(Vec2 w) {
  if (w.v < 0 || (w.v == 0 && w.u < 0)) return {-w.u, -w.v};
  return w;
}

// Strict order on [0, pi) with infinitesimal sides.
bool angle_less(const EndAngle& x, const EndAngle& y) {
  std::int64_t c = det(x.w, y.w);
  if (c != 0) return c > 0;
  return x.side < y.side;
}

std::vector<std::pair<Puncture, EndAngle>> ends_of(const ArcClass& x) {
  Vec2 w = upper(x.vec);
  if (x.is_loop()) return {{x.base(), {w, -1}}, {x.base(), {w, 1}}};
  return {{x.first, {w, 0}}, {x.second, {w, 0}}};
}

enum class Config { delta, epsilon, n_shape };

const char* config_name(Config c) {
  switch (c) {
    case Config::delta: return "delta";
    case Config::epsilon: return "epsilon";
    case Config::n_shape: return "N";
  }
  return "";
}

// Cutting along the tree leaves a hexagon whose corners are the sectors
// between consecutive tree ends at each puncture. Three diagonals meet the
// corners with multiplicities {3,1,1,1} (epsilon), {2,2,1,1} (N) or {2,2,2}
// (delta).
Config hexagon_config(const std::vector<ArcClass>& tree, const std::vector<ArcClass>& diagonals) {
  std::map<Puncture, std::vector<EndAngle>> walls;
  for (const auto& t : tree)
    for (auto [p, a] : ends_of(t)) walls[p].push_back(a);
  for (auto& [p, v] : walls) std::sort(v.begin(), v.end(), angle_less);
  std::map<std::pair<Puncture, std::size_t>, int> corner;
  for (const auto& d : diagonals) {
    for (auto [p, a] : ends_of(d)) {
      const auto& v = walls[p];
      std::size_t sector = 0;
      while (sector < v.size() && angle_less(v[sector], a)) ++sector;
      if (sector == v.size()) sector = 0;
      ++corner[{p, sector}];
    }
  }
  std::vector<int> m;
  for (auto [c, n] : corner) m.push_back(n);
  std::sort(m.rbegin(), m.rend());
  if (m[0] == 3) return Config::epsilon;
  if (m.size() == 3) return Config::delta;
  return Config::n_shape;
}

struct Census {
  std::vector<OrbitClass> classes;
  std::size_t index_of(const ArcSystem& s) const {
    ArcSystem c = canonicalize(s);
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].representative == c) return i;
    throw std::logic_error("system outside the enumerated classes");
  }
};

const char* kRoman[] = {"(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)"};

struct TreeHint {
  const char* tree;
  Config config;
  std::set<int> labels;  // indices into kRoman
};

// Which labelled systems each tree/configuration pair produces.
const std::vector<TreeHint>& tree_hints() {
  static const std::vector<TreeHint> h{
      {"T_a", Config::delta, {5}},      {"T_a", Config::epsilon, {0, 5}}, {"T_a", Config::n_shape, {0, 1, 4}},
      {"T_b", Config::delta, {1, 2}},   {"T_b", Config::epsilon, {3, 0}}, {"T_b", Config::n_shape, {5}},
  };
  return h;
}

std::vector<ArcClass> tree_a() {
  return {seg(Puncture::a, Puncture::b, 1, 0), seg(Puncture::b, Puncture::c, 1, 1), seg(Puncture::c, Puncture::d, 1, 0)};
}
std::vector<ArcClass> tree_b() {
  return {seg(Puncture::a, Puncture::b, 1, 0), seg(Puncture::b, Puncture::d, 0, 1), seg(Puncture::b, Puncture::c, 1, 1)};
}

std::vector<SystemRecord> zero_systems() {
  Census census{classify(find_systems(0, 6, 12).systems)};
  struct Completion {
    std::string tree;
    Config config;
    std::vector<ArcClass> arcs;
    std::size_t cls;
  };
  std::vector<Completion> found;
  for (auto [name, tree] : {std::pair{"T_a", tree_a()}, std::pair{"T_b", tree_b()}}) {
    if (!is_k_system(tree, 0)) throw std::logic_error("tree arcs are not disjoint");
    auto triangulations = cliques_of(disjoint_from(tree), 0, 3);
    if (triangulations.size() != 14) throw std::logic_error("hexagon without 14 triangulations");
    for (const auto& d : triangulations) {
      auto all = join(tree, d);
      found.push_back({name, hexagon_config(tree, d), all, census.index_of(ArcSystem(all, 0))});
    }
  }
  // Observed classes per tree/configuration.
  std::map<std::pair<std::string, Config>, std::set<std::size_t>> seen;
  for (const auto& c : found) seen[{c.tree, c.config}].insert(c.cls);

  // The labelling of the classes is the bijection consistent with every hint.
  std::vector<std::size_t> perm(census.classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;  // label i -> class perm[i]
  std::vector<std::vector<std::size_t>> solutions;
  do {
    bool ok = true;
    for (const auto& h : tree_hints()) {
      std::set<std::size_t> want;
      for (int l : h.labels) want.insert(perm[l]);
      if (seen[{h.tree, h.config}] != want) ok = false;
    }
    if (ok) solutions.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (solutions.size() != 1) {
    for (const auto& [key, cls] : seen) {
      std::cerr << key.first << ' ' << config_name(key.second) << ':';
      for (auto c : cls) std::cerr << ' ' << to_string(census.classes[c].fingerprint.system_degrees);
      std::cerr << '\n';
    }
    throw std::logic_error(std::to_string(solutions.size()) + " labellings fit the tree hints");
  }
  std::vector<SystemRecord> out;
  for (int l = 0; l < 6; ++l) {
    std::size_t cls = solutions[0][l];
    for (const auto& c : found) {
      if (c.cls != cls) continue;
      SystemRecord r{std::string("zero") + kRoman[l], ArcSystem(c.arcs, 0), kRoman[l],
                     {{"tree", c.tree}, {"configuration", config_name(c.config)}}};
      out.push_back(std::move(r));
      break;
    }
  }
  return out;
}

SystemRecord record(std::string name, const std::vector<ArcClass>& arcs, std::string label,
                    std::map<std::string, std::string> tags = {}) {
  ArcSystem s(arcs, 1);
  if (s.size() != 12) throw std::logic_error(name + " does not have 12 arcs");
  return {std::move(name), std::move(s), std::move(label), std::move(tags)};
}

std::vector<SystemRecord> one_systems() {
  std::vector<SystemRecord> out;
  // |J| = 3: the tree with every diagonal of its hexagon.
  for (auto [label, tree] : {std::pair{"J_3a", tree_a()}, std::pair{"J_3b", tree_b()}}) {
    auto diag = disjoint_from(tree);
    if (diag.size() != 9) throw std::logic_error("hexagon without 9 diagonals");
    out.push_back(record(label, join(tree, diag), label, {{"tree", label == std::string("J_3a") ? "T_a" : "T_b"}}));
  }

  // |J| = 2 with connected Gamma_J: the path a-b-c cut open to a punctured
  // square, filled by a maximum 1-system of that square.
  std::vector<ArcClass> path{seg(Puncture::a, Puncture::b, 1, 0), seg(Puncture::b, Puncture::c, 1, 1)};
  std::map<std::string, std::vector<ArcClass>> by_degrees;
  for (const auto& w : cliques_of(disjoint_from(path), 1, 10)) {
    auto all = join(path, w);
    if (disjoint_subset(all).size() != 2) continue;
    auto key = to_string(degree_vector(all));
    if (!by_degrees.count(key)) by_degrees[key] = all;
  }
  const std::pair<const char*, const char*> connected[] = {{"J_2a", "(10,6,4,4)"}, {"J_2b", "(10,5,5,4)"}};
  for (auto [label, deg] : connected) {
    if (!by_degrees.count(deg)) throw std::logic_error(std::string("no completion for ") + label);
    out.push_back(record(label, by_degrees[deg], label, {{"cut", "path"}}));
  }

  // |J| = 2 disconnected: the cut pair, an annulus family F or G, two loops.
  auto cut = omega_cut();
  std::vector<ArcClass> j{cut[0], cut[1]};
  auto sorted_j = j;
  std::sort(sorted_j.begin(), sorted_j.end());
  std::set<ArcSystem> seen;
  for (const auto& fam : omega_loopfree_max_systems()) {
    std::vector<ArcClass> base = j;
    for (const auto& s : fam.representative) base.push_back(embed_omega(s));
    std::vector<ArcClass> loops;
    for (const auto& x : universe()) {
      if (x.is_loop() && std::all_of(base.begin(), base.end(), [&](const ArcClass& y) { return intersect(x, y) <= 1; }))
        loops.push_back(x);
    }
    int count = 0;
    for (const auto& pair : cliques_of(loops, 1, 2)) {
      auto all = join(base, pair);
      auto js = disjoint_subset(all);
      std::sort(js.begin(), js.end());
      if (js != sorted_j) continue;
      ArcSystem c = canonicalize(ArcSystem(all, 1));
      if (!seen.insert(c).second) continue;
      std::string label = fam.label == "G" ? "J_2e" : "J_2c/J_2d";
      out.push_back(record(label + (fam.label == "F" ? std::string("#") + std::to_string(++count) : ""), all, label,
                           {{"cut", "annulus"}, {"family", fam.label}}));
    }
  }

  // |J| = 1: J0, phi, sigma with tau* = 1/4, the Omega arcs it permits, one loop.
  std::vector<ArcClass> j1{j1_base(), j1_phi(), ad_arc(1)};
  for (auto t : {-1, 0, 1, 2}) {
    auto fams = t % 2 == 0 ? std::array{OmegaFamily::a_b, OmegaFamily::d_c} : std::array{OmegaFamily::a_c, OmegaFamily::d_b};
    for (auto f : fams) j1.push_back(embed_omega(omega_arc(f, HalfInt{t})));
  }
  for (const auto& x : universe()) {
    if (!x.is_loop()) continue;
    auto all = join(j1, {x});
    if (is_k_system(all, 1) && disjoint_subset(all).size() == 1) {
      out.push_back(record("J_1", all, "J_1", {{"tau_star", "1/4"}}));
      break;
    }
  }

  // |J| = 0.
  using P = Puncture;
  out.push_back(record("J_0",
                       {seg(P::a, P::b, 1, 0), seg(P::a, P::b, 1, 2), seg(P::c, P::d, 1, 0), seg(P::c, P::d, 1, 2),
                        seg(P::a, P::c, 0, 1), seg(P::a, P::c, 2, 1), seg(P::b, P::d, 0, 1), seg(P::b, P::d, 2, 1),
                        seg(P::a, P::d, 1, 1), seg(P::a, P::d, 1, -1), seg(P::b, P::c, 1, 1), seg(P::b, P::c, 1, -1)},
                       "J_0"));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    auto records = zero_systems();
    auto ones = one_systems();
    records.insert(records.end(), ones.begin(), ones.end());
    std::string text = systems_to_json(records);
    if (argc > 1)
      write_text_file_atomic(argv[1], text);
    else
      std::cout << text;
  } catch (const std::exception& e) {
    std::cerr << "refgen: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
