#include "arcsys/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "arcsys/error.hpp"
#include "arcsys/intersection.hpp"
#include "arcsys/pl_oracle.hpp"
#include "arcsys/records.hpp"
#include "arcsys/subsurface.hpp"
#include "arcsys/symmetry.hpp"

namespace arcsys {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::reconciled: return "reconciled";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.status != CheckStatus::fail; });
}

namespace {

struct Context {
  const VerificationOptions& opt;
  std::vector<ArcClass> universe;
  SearchResult zero;
  SearchResult one;
  std::vector<OrbitClass> zero_classes;
  std::vector<OrbitClass> one_classes;
  std::vector<SystemRecord> references;
  std::string reference_error;
  ReconciliationReport reconciliation;
};

CheckEntry entry(std::string id, int criterion, std::string statement) {
  return {std::move(id), criterion, std::move(statement), CheckStatus::fail, {}};
}

void finish(CheckEntry& e, bool ok, const std::string& details) {
  e.status = ok ? CheckStatus::pass : CheckStatus::fail;
  e.details = details;
}

std::string sizes_text(const std::map<std::size_t, std::size_t>& sizes) {
  std::ostringstream os;
  bool first = true;
  for (auto [s, c] : sizes) {
    os << (first ? "" : ", ") << c << " of size " << s;
    first = false;
  }
  return os.str();
}

std::size_t max_clique_size(const std::vector<ArcClass>& arcs, int k) {
  auto cl = maximal_cliques(build_graph(arcs, k));
  std::size_t best = 0;
  for (const auto& c : cl) best = std::max(best, c.size());
  return best;
}

CheckEntry zero_cardinality(Context& cx) {
  auto e = entry("zero_system_cardinality", 1, "every saturated 0-system has 3|chi| = 6 arcs");
  const auto& r = cx.zero;
  bool ok = !r.systems.empty() && std::all_of(r.systems.begin(), r.systems.end(), [](const ArcSystem& s) {
    return s.size() == 6;
  });
  std::size_t small = 0;
  for (auto [s, c] : r.clique_sizes) {
    if (s != 6) small += c;
  }
  ok = ok && small <= r.unsaturated;
  std::ostringstream os;
  os << "maximal cliques at n=" << r.bound << ": " << sizes_text(r.clique_sizes) << "; " << r.unsaturated
     << " extend within n'=" << r.check_bound << " (every clique below 6 is among them); " << r.systems.size()
     << " saturated systems, all of size 6";
  finish(e, ok, os.str());
  return e;
}

bool distinct_degrees(const std::vector<OrbitClass>& cls) {
  std::set<DegreeVector> seen;
  for (const auto& c : cls) seen.insert(c.fingerprint.system_degrees);
  return seen.size() == cls.size();
}

CheckEntry zero_classification(Context& cx) {
  auto e = entry("zero_system_classification", 2, "six classes of saturated 0-systems with distinct degree vectors");
  std::ostringstream os;
  os << cx.zero_classes.size() << " classes:";
  for (const auto& c : cx.zero_classes)
    os << ' ' << (c.label.empty() ? "?" : c.label) << to_string(c.fingerprint.system_degrees);
  finish(e, cx.zero_classes.size() == 6 && distinct_degrees(cx.zero_classes), os.str());
  return e;
}

CheckEntry one_cardinality(Context& cx) {
  auto e = entry("one_system_cardinality", 3, "maximal 1-systems have 2|chi|(|chi|+1) = 12 arcs and no clique exceeds 12");
  const auto& r = cx.one;
  std::size_t largest = r.clique_sizes.empty() ? 0 : r.clique_sizes.rbegin()->first;
  bool ok = largest == 12 && !r.systems.empty() &&
            std::all_of(r.systems.begin(), r.systems.end(), [](const ArcSystem& s) { return s.size() == 12; });
  std::ostringstream os;
  os << "maximal cliques at n=" << r.bound << ": " << sizes_text(r.clique_sizes) << "; " << r.unsaturated
     << " extend within n'=" << r.check_bound << "; " << r.below_target << " saturated below 12; "
     << r.systems.size() << " saturated systems of size 12";
  finish(e, ok, os.str());
  return e;
}

CheckEntry one_classification(Context& cx) {
  auto e = entry("one_system_classification", 4,
                 "nine classes of maximal 1-systems, |J| multiset {3,3,2,2,2,2,2,1,0}, path and star trees, "
                 "degrees (10,6,4,4) and (10,5,5,4)");
  const auto& cls = cx.one_classes;
  std::multiset<int> jsizes;
  std::set<DegreeVector> jdeg3, sysdeg;
  for (const auto& c : cls) {
    jsizes.insert(c.fingerprint.j_size);
    if (c.fingerprint.j_size == 3) jdeg3.insert(c.fingerprint.j_degrees);
    sysdeg.insert(c.fingerprint.system_degrees);
  }
  bool ok = cls.size() == 9 && jsizes == std::multiset<int>{3, 3, 2, 2, 2, 2, 2, 1, 0} &&
            jdeg3 == std::set<DegreeVector>{{{2, 2, 1, 1}}, {{3, 1, 1, 1}}} && sysdeg.count({{10, 6, 4, 4}}) &&
            sysdeg.count({{10, 5, 5, 4}});
  std::map<std::string, int> labels;
  for (const auto& c : cls) ++labels[c.label];
  for (const char* l : {"J_3a", "J_3b", "J_2a", "J_2b", "J_2e", "J_1", "J_0"}) ok = ok && labels[l] == 1;
  ok = ok && labels["J_2c/J_2d"] == 2;
  std::ostringstream os;
  os << cls.size() << " classes:";
  for (const auto& c : cls) os << ' ' << (c.label.empty() ? "?" : c.label) << "[|J|=" << c.fingerprint.j_size
                               << ' ' << to_string(c.fingerprint.system_degrees) << ']';
  finish(e, ok, os.str());
  return e;
}

CheckEntry engine_oracle(Context& cx) {
  auto e = entry("engine_oracle_equivalence", 5,
                 "closed-form intersection numbers equal the polyline oracle on every pair at n=6");
  const auto& u = cx.universe;
  std::size_t pairs = 0, mismatches = 0, unstable = 0, parity = 0;
  std::string first;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) {
      ++pairs;
      int fast = intersect(u[i], u[j]);
      int slow = oracle_intersect(u[i], u[j]);
      if (fast != slow) {
        if (mismatches++ == 0)
          first = to_string(u[i]) + " vs " + to_string(u[j]) + ": closed form " + std::to_string(fast) +
                  ", oracle " + std::to_string(slow);
      }
      if (i != j && pl_crossings(u[i], u[j], {2, 3}) != slow) ++unstable;
      if (i != j && !u[i].is_loop() && !u[j].is_loop()) {
        auto d = std::llabs(det(u[i].vec, u[j].vec)) - shared_endpoints(u[i], u[j]);
        if (d < 0 || d % 2 != 0) ++parity;
      }
    }
  }
  std::ostringstream os;
  os << pairs << " pairs, " << mismatches << " mismatches, " << unstable
     << " pairs changed under a second representative, " << parity << " parity violations";
  if (!first.empty()) os << "; first mismatch " << first;
  finish(e, mismatches == 0 && unstable == 0 && parity == 0, os.str());
  return e;
}

CheckEntry twist_law(Context&) {
  auto e = entry("twist_intersection_law", 6,
                 "|s1 n s2| = |tau(s1) - tau(s2)| - eta/2 on the annulus, |tau| <= 4");
  auto arcs = omega_universe(HalfInt::integer(4));
  std::size_t pairs = 0, bad = 0, twist_bad = 0, bijection_bad = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    ArcClass xi = embed_omega(arcs[i]);
    for (const auto& c : omega_cut()) bijection_bad += intersect(xi, c) != 0;
    if (omega_coordinates(xi) != arcs[i]) ++bijection_bad;
    OmegaArcClass shifted{arcs[i].family, HalfInt{arcs[i].tau.twice + 2}};
    ArcClass twisted = segment(xi.first, xi.second, omega_twist() * xi.vec);
    if (twisted != embed_omega(shifted)) ++twist_bad;
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      ++pairs;
      if (tau_intersect(arcs[i], arcs[j]) != intersect(xi, embed_omega(arcs[j]))) ++bad;
    }
  }
  // Every arc from {a,d} to {b,c} missing both cut arcs is an Omega arc.
  for (const auto& x : arc_universe(ComplexityBound(9))) {
    if (x.is_loop()) continue;
    bool crosses = (x.first == Puncture::a || x.first == Puncture::d) != (x.second == Puncture::a || x.second == Puncture::d);
    if (crosses && intersect(x, omega_cut()[0]) == 0 && intersect(x, omega_cut()[1]) == 0 && !omega_coordinates(x))
      ++bijection_bad;
  }
  std::ostringstream os;
  os << pairs << " pairs, " << bad << " mismatches; twist shifts tau by 1 with " << twist_bad
     << " failures; " << bijection_bad << " embedding defects";
  finish(e, bad == 0 && twist_bad == 0 && bijection_bad == 0, os.str());
  return e;
}

CheckEntry annulus(Context&) {
  auto e = entry("annulus_systems", 7, "two loop-free maximal 1-systems on the annulus, degrees (6,6,4,4) and (5,5,5,5)");
  auto cls = omega_loopfree_max_systems();
  std::set<DegreeVector> degs;
  std::ostringstream os;
  os << cls.size() << " classes:";
  for (const auto& c : cls) {
    degs.insert(c.degrees);
    os << ' ' << c.label << to_string(c.degrees) << " with " << c.representative.size() << " crossing arcs";
  }
  finish(e, cls.size() == 2 && degs == std::set<DegreeVector>{{{6, 6, 4, 4}}, {{5, 5, 5, 5}}}, os.str());
  return e;
}

CheckEntry polygons(Context&) {
  auto e = entry("punctured_polygons", 8, "a once-punctured n-gon carries at most 1, 3, 6, 10 arcs of a 1-system");
  const int expect[] = {1, 3, 6, 10};
  bool ok = true;
  std::ostringstream os;
  for (int n = 1; n <= 4; ++n) {
    auto r = dn_max_1_system(n);
    ok = ok && r.max_size == expect[n - 1] && !r.witnesses.empty();
    os << (n > 1 ? "; " : "") << "n=" << n << ": " << r.max_size << " (" << r.witnesses.size()
       << " witnesses, without loops " << r.max_size_without_loops << ", stable from window " << r.stable_window << ")";
  }
  finish(e, ok, os.str());
  return e;
}

CheckEntry structure(Context& cx) {
  auto e = entry("structural_properties", 9,
                 "|J| <= 3, Gamma_J acyclic; loop-free systems split every dual pair 2+2 with a perfect matching");
  std::size_t jbad = 0, cyc = 0, loopfree = 0, census_bad = 0;
  std::map<std::string, std::size_t> loop_census;
  for (const auto& s : cx.one.systems) {
    auto j = disjoint_subset(s.arcs());
    if (j.size() > 3) ++jbad;
    if (is_separating(j)) ++cyc;
    auto census = dual_pair_census(s.arcs());
    if (loop_count(s.arcs()) == 0) {
      ++loopfree;
      for (const auto& c : census) {
        if (c.between_q != 2 || c.between_q_star != 2 || !c.perfect_matching) ++census_bad;
      }
    } else {
      std::ostringstream key;
      for (const auto& c : census) key << '(' << c.between_q << ',' << c.between_q_star << ')';
      ++loop_census[key.str()];
    }
  }
  std::ostringstream os;
  os << cx.one.systems.size() << " systems: " << jbad << " with |J| > 3, " << cyc << " with a cycle in Gamma_J; "
     << loopfree << " loop-free, " << census_bad << " census failures; systems with loops show "
     << loop_census.size() << " distinct census patterns (reported only)";
  finish(e, !cx.one.systems.empty() && jbad == 0 && cyc == 0 && loopfree > 0 && census_bad == 0, os.str());
  return e;
}

CheckEntry pairwise_bounds(Context& cx) {
  auto e = entry("pairwise_bounds", 10,
                 "at most three arcs between two punctures; at most five arcs with bottom endpoint a");
  bool ok = true;
  std::ostringstream os;
  os << "between pairs:";
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      std::vector<ArcClass> between;
      for (const auto& x : cx.universe) {
        if (!x.is_loop() && index_of(x.first) == p && index_of(x.second) == q) between.push_back(x);
      }
      auto m = max_clique_size(between, 1);
      ok = ok && m == 3;
      os << ' ' << label_of(puncture_at(p)) << label_of(puncture_at(q)) << '=' << m;
    }
  }
  auto all = omega_universe(HalfInt::integer(4));
  std::vector<OmegaArcClass> za;
  for (const auto& s : all) {
    if (bottom(s.family) == Puncture::a) za.push_back(s);
  }
  std::vector<std::vector<bool>> adj(za.size(), std::vector<bool>(za.size(), false));
  for (std::size_t i = 0; i < za.size(); ++i)
    for (std::size_t j = 0; j < za.size(); ++j) adj[i][j] = i != j && tau_intersect(za[i], za[j]) <= 1;
  auto cl = maximal_cliques(graph_from_matrix(za.size(), adj));
  std::size_t best = 0;
  for (const auto& c : cl) best = std::max(best, c.size());
  ok = ok && best == 5;
  os << "; families with bottom endpoint a, |tau| <= 4: max " << best << " (" << cl.size() << " maximal families)";
  finish(e, ok, os.str());
  return e;
}

CheckEntry tau_star_check(Context& cx) {
  auto e = entry("tau_star_reconciliation", 11,
                 "tau* formulas tabulated; permissible tau at tau* = 1/4 is {0, +-1/2, 1}");
  cx.reconciliation = reconcile_tau_star_formulas(ComplexityBound(cx.opt.check_bound));
  const auto& r = cx.reconciliation;
  std::vector<HalfInt> expect{HalfInt{-1}, HalfInt{0}, HalfInt{1}, HalfInt{2}};
  bool adbc = r.permissible_at_quarter == expect && r.ad_bc.status == ReconciliationStatus::confirmed;
  std::size_t shift_bad = 0;
  SymmetryElement h = half_twist_bc();
  if (apply_symmetry(h, j1_base()) != j1_base() || apply_symmetry(h, j1_phi()) != j1_phi()) ++shift_bad;
  for (std::int64_t m = r.m_min; m < r.m_max; ++m) {
    TauStar here = tau_star(ad_arc(m), ComplexityBound(cx.opt.check_bound));
    TauStar next = tau_star(apply_symmetry(h, ad_arc(m)), ComplexityBound(cx.opt.check_bound));
    if (next.quarters != here.quarters + 2) ++shift_bad;
  }
  bool table = !r.ad_ad.rows.empty() && !r.ad_bc.rows.empty();
  std::ostringstream os;
  os << "ad/ad: " << status_name(r.ad_ad.status);
  if (r.ad_ad.status == ReconciliationStatus::reconciled)
    os << " as " << to_string(r.ad_ad.slope) << "|dtau*| " << (r.ad_ad.offset.num < 0 ? "- " : "+ ")
       << to_string(Fraction{std::llabs(r.ad_ad.offset.num), r.ad_ad.offset.den}) << " ("
       << r.ad_ad.mismatches << " of " << r.ad_ad.rows.size() << " rows differ from 2|dtau*|+1)";
  os << "; ad/bc: " << status_name(r.ad_bc.status) << " over " << r.ad_bc.rows.size() << " rows; permissible {";
  for (std::size_t i = 0; i < r.permissible_at_quarter.size(); ++i)
    os << (i ? ", " : "") << to_string(r.permissible_at_quarter[i]);
  os << "}; half twist shifts tau* by 1/2 with " << shift_bad << " failures";
  bool ok = adbc && table && shift_bad == 0;
  e.details = os.str();
  e.status = !ok ? CheckStatus::fail
                 : (r.ad_ad.status == ReconciliationStatus::confirmed ? CheckStatus::pass : CheckStatus::reconciled);
  return e;
}

CheckEntry coverage(Context& cx) {
  auto e = entry("reference_coverage", 12, "reference systems canonicalize onto the discovered classes, surjectively");
  if (!cx.reference_error.empty()) {
    finish(e, false, "references not loaded: " + cx.reference_error);
    return e;
  }
  std::map<int, std::set<ArcSystem>> found;
  for (const auto& c : cx.zero_classes) found[0].insert(c.representative);
  for (const auto& c : cx.one_classes) found[1].insert(c.representative);
  std::map<int, std::set<ArcSystem>> hit;
  std::map<std::string, std::set<ArcSystem>> by_label;
  std::size_t stray = 0;
  std::string first_stray;
  for (const auto& r : cx.references) {
    ArcSystem c = canonicalize(r.system);
    if (!found[r.system.k()].count(c)) {
      if (stray++ == 0) first_stray = r.name;
      continue;
    }
    hit[r.system.k()].insert(c);
    by_label[std::to_string(r.system.k()) + ":" + r.label].insert(c);
  }
  // Labels are consistent: one label per class (the J_2c/J_2d group spans two).
  bool labels_ok = true;
  std::map<ArcSystem, std::set<std::string>> labels_of;
  for (const auto& [l, forms] : by_label) {
    if (forms.size() != (l == "1:J_2c/J_2d" ? 2u : 1u)) labels_ok = false;
    for (const auto& f : forms) labels_of[f].insert(l);
  }
  for (const auto& [f, ls] : labels_of) labels_ok = labels_ok && ls.size() == 1;
  for (const auto& c : cx.one_classes) {
    auto it = labels_of.find(c.representative);
    if (it == labels_of.end() || *it->second.begin() != "1:" + c.label) labels_ok = false;
  }
  std::size_t n0 = 0, n1 = 0;
  for (const auto& r : cx.references) (r.system.k() == 0 ? n0 : n1)++;
  bool ok = stray == 0 && hit[0] == found[0] && hit[1] == found[1] && !found[0].empty() && !found[1].empty() &&
            labels_ok;
  std::ostringstream os;
  os << cx.references.size() << " reference systems (" << n0 << " with k=0, " << n1 << " with k=1) reach "
     << hit[0].size() << "/" << found[0].size() << " and " << hit[1].size() << "/" << found[1].size()
     << " classes; " << stray << " outside the classes";
  if (!first_stray.empty()) os << " (first: " << first_stray << ")";
  os << "; labels " << (labels_ok ? "consistent" : "inconsistent");
  finish(e, ok, os.str());
  return e;
}

CheckEntry saturation(Context& cx) {
  auto e = entry("saturation_margins", 0, "no arc of complexity up to n' extends an accepted system");
  std::size_t extended = 0, non_monotone = 0, systems = 0;
  for (const auto* list : {&cx.zero.systems, &cx.one.systems}) {
    for (const auto& s : *list) {
      ++systems;
      auto ev = saturation_margin(s, cx.opt.bound, cx.opt.check_bound);
      extended += ev.extended();
      non_monotone += !ev.monotone();
    }
  }
  std::ostringstream os;
  os << systems << " systems over shells " << cx.opt.bound + 1 << ".." << cx.opt.check_bound << ": " << extended
     << " extended, " << non_monotone << " with non-monotone margins (reported, not asserted)";
  finish(e, extended == 0, os.str());
  return e;
}

CheckEntry symmetry_checks(Context& cx) {
  auto e = entry("symmetry_invariance", 0,
                 "generators preserve intersection numbers, the k-system property and fingerprints, and act as S4");
  std::size_t equiv_bad = 0, inv_bad = 0;
  auto small = arc_universe(ComplexityBound(4));
  for (const auto& g : generators()) {
    std::vector<ArcClass> img = apply_symmetry(g.element, small);
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = i + 1; j < small.size(); ++j) equiv_bad += intersect(img[i], img[j]) != intersect(small[i], small[j]);
    for (const auto* list : {&cx.zero.systems, &cx.one.systems}) {
      for (const auto& s : *list) {
        auto im = apply_symmetry(g.element, s.arcs());
        if (!is_k_system(im, s.k())) {
          ++inv_bad;
          continue;
        }
        if (fingerprint(ArcSystem(im, s.k())) != fingerprint(s)) ++inv_bad;
      }
    }
  }
  // Closure of the puncture action.
  std::set<std::array<Puncture, 4>> perms{puncture_action(identity_symmetry())};
  std::vector<std::array<Puncture, 4>> frontier(perms.begin(), perms.end());
  while (!frontier.empty()) {
    auto p = frontier.back();
    frontier.pop_back();
    for (const auto& g : generators()) {
      auto gp = puncture_action(g.element);
      std::array<Puncture, 4> q{};
      for (int i = 0; i < 4; ++i) q[i] = gp[index_of(p[i])];
      if (perms.insert(q).second) frontier.push_back(q);
    }
  }
  std::ostringstream os;
  os << equiv_bad << " intersection changes at n<=4, " << inv_bad << " invariant changes on enumerated systems; "
     << "puncture action has " << perms.size() << " permutations";
  finish(e, equiv_bad == 0 && inv_bad == 0 && perms.size() == 24, os.str());
  return e;
}

CheckEntry canonical_checks(Context& cx) {
  auto e = entry("canonical_forms", 0,
                 "canonical forms are idempotent, witnessed by generator words, and closed under generators");
  std::size_t idem = 0, witness = 0, completeness = 0, twisted = 0;
  std::map<int, std::set<ArcSystem>> reps;
  for (const auto& c : cx.zero_classes) reps[0].insert(c.representative);
  for (const auto& c : cx.one_classes) reps[1].insert(c.representative);
  for (const auto* list : {&cx.zero.systems, &cx.one.systems}) {
    for (const auto& s : *list) {
      auto cw = canonicalize_with_witness(s);
      if (canonicalize(cw.system) != cw.system) ++idem;
      Word w = decompose(cw.witness);
      auto img = apply_symmetry(evaluate(w), s.arcs());
      std::sort(img.begin(), img.end());
      if (img != cw.system.arcs()) ++witness;
      for (const auto& g : generators()) {
        if (!reps[s.k()].count(canonicalize(ArcSystem(apply_symmetry(g.element, s.arcs()), s.k())))) ++completeness;
      }
    }
  }
  const auto& gens = generators();
  Word three{{0, 1}, {1, -1}, {0, 1}};
  for (const auto& r : cx.references) {
    ArcSystem t(apply_symmetry(evaluate(three), r.system.arcs()), r.system.k());
    if (canonicalize(t) != canonicalize(r.system)) ++twisted;
  }
  std::ostringstream os;
  os << idem << " idempotence failures, " << witness << " witness failures, " << completeness
     << " generator images outside the class list (" << gens.size() << " generators), " << twisted
     << " twisted references changing class";
  finish(e, idem == 0 && witness == 0 && completeness == 0 && twisted == 0, os.str());
  return e;
}

template <class F>
void run_check(Context& cx, VerificationReport& rep, F&& f) {
  CheckEntry c;
  try {
    c = f(cx);
  } catch (const std::exception& ex) {
    c.id = c.id.empty() ? "check" : c.id;
    c.status = CheckStatus::fail;
    c.details = std::string("exception: ") + ex.what();
  }
  if (cx.opt.on_check) cx.opt.on_check(c);
  rep.checks.push_back(std::move(c));
}

}  // namespace

VerificationReport run_verification(const VerificationOptions& options) {
  VerificationReport rep;
  rep.bound = options.bound;
  rep.check_bound = options.check_bound;
  Context cx{options, arc_universe(ComplexityBound(options.bound)), {}, {}, {}, {}, {}, {}, {}};
  cx.zero = find_systems(0, options.bound, options.check_bound);
  cx.one = find_systems(1, options.bound, options.check_bound);
  if (options.reference_path.empty()) {
    cx.reference_error = "no reference file given";
  } else {
    try {
      cx.references = systems_from_json(read_text_file(options.reference_path));
    } catch (const std::exception& ex) {
      cx.reference_error = ex.what();
    }
  }
  std::vector<std::pair<ArcSystem, std::string>> labelled;
  for (const auto& r : cx.references) {
    if (!r.label.empty()) labelled.emplace_back(r.system, r.label);
  }
  cx.zero_classes = classify(cx.zero.systems);
  match_reference_labels(cx.zero_classes, labelled);
  cx.one_classes = classify(cx.one.systems);
  match_labels(cx.one_classes);

  run_check(cx, rep, zero_cardinality);
  run_check(cx, rep, zero_classification);
  run_check(cx, rep, one_cardinality);
  run_check(cx, rep, one_classification);
  run_check(cx, rep, engine_oracle);
  run_check(cx, rep, twist_law);
  run_check(cx, rep, annulus);
  run_check(cx, rep, polygons);
  run_check(cx, rep, structure);
  run_check(cx, rep, pairwise_bounds);
  run_check(cx, rep, tau_star_check);
  run_check(cx, rep, coverage);
  run_check(cx, rep, saturation);
  run_check(cx, rep, symmetry_checks);
  run_check(cx, rep, canonical_checks);

  rep.reconciliation = cx.reconciliation;
  rep.zero_classes = cx.zero_classes;
  rep.one_classes = cx.one_classes;
  return rep;
}

namespace {

nlohmann::ordered_json formula_json(const FormulaReconciliation& f) {
  nlohmann::ordered_json j;
  j["id"] = f.id;
  j["statement"] = f.statement;
  j["status"] = status_name(f.status);
  if (f.status == ReconciliationStatus::reconciled) {
    j["fitted_slope"] = to_string(f.slope);
    j["fitted_offset"] = to_string(f.offset);
  }
  j["mismatching_rows"] = f.mismatches;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : f.rows) {
    rows.push_back({{"x", to_string(r.x)},
                    {"y", to_string(r.y)},
                    {"distance", to_string(r.distance)},
                    {"formula", r.formula},
                    {"engine", r.engine}});
  }
  j["rows"] = rows;
  return j;
}

nlohmann::ordered_json classes_json(const std::vector<OrbitClass>& cls) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : cls) {
    arr.push_back({{"label", c.label},
                   {"members", c.members},
                   {"fingerprint", to_string(c.fingerprint)}});
  }
  return arr;
}

}  // namespace

std::string verification_report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "verification_report";
  j["bound"] = report.bound;
  j["check_bound"] = report.check_bound;
  j["overall"] = report.passed() ? "pass" : "fail";
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"criterion", c.criterion},
                      {"statement", c.statement},
                      {"status", status_name(c.status)},
                      {"details", c.details}});
  }
  j["checks"] = checks;
  nlohmann::ordered_json rec;
  const auto& r = report.reconciliation;
  rec["bound"] = r.bound;
  rec["ad_window_m"] = {r.m_min, r.m_max};
  rec["tau_window"] = to_string(r.tau_window);
  rec["disk"] = r.disk_choice;
  nlohmann::ordered_json perm = nlohmann::ordered_json::array();
  for (auto h : r.permissible_at_quarter) perm.push_back(to_string(h));
  rec["permissible_tau_at_quarter"] = perm;
  rec["formulas"] = {formula_json(r.ad_ad), formula_json(r.ad_bc)};
  j["tau_star_reconciliation"] = rec;
  j["zero_classes"] = classes_json(report.zero_classes);
  j["one_classes"] = classes_json(report.one_classes);
  return j.dump(1) + "\n";
}

}  // namespace arcsys
