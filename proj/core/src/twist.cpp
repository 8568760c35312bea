#include "arcsys/twist.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cstdlib>
#include <map>
#include <set>

#include "arcsys/error.hpp"
#include "arcsys/intersection.hpp"

namespace arcsys {

using Rational = boost::rational<std::int64_t>;

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

Puncture bottom(OmegaFamily f) {
  return (f == OmegaFamily::a_b || f == OmegaFamily::a_c) ? Puncture::a : Puncture::d;
}

Puncture top(OmegaFamily f) {
  return (f == OmegaFamily::a_b || f == OmegaFamily::d_b) ? Puncture::b : Puncture::c;
}

bool integral_family(OmegaFamily f) { return f == OmegaFamily::a_b || f == OmegaFamily::d_c; }

std::string to_string(OmegaFamily f) {
  return std::string("X_") + label_of(bottom(f)) + "^" + label_of(top(f));
}

OmegaArcClass omega_arc(OmegaFamily f, HalfInt tau) {
  if (integral_family(f) != tau.is_integer())
    throw DomainError("tau parity does not match family " + to_string(f));
  return {f, tau};
}

int tau_intersect(const OmegaArcClass& s1, const OmegaArcClass& s2) {
  if (s1 == s2) throw DomainError("tau_intersect needs distinct classes");
  int eta = (bottom(s1.family) == bottom(s2.family)) + (top(s1.family) == top(s2.family));
  std::int64_t num = std::llabs(s1.tau.twice - s2.tau.twice) - eta;
  if (num < 0 || num % 2 != 0) throw DomainError("tau formula is not a non-negative integer");
  return static_cast<int>(num / 2);
}

std::array<ArcClass, 2> omega_cut() {
  return {segment(Puncture::a, Puncture::d, {1, 1}), segment(Puncture::b, Puncture::c, {1, 1})};
}

Mat2 omega_twist() { return {3, -2, 2, -1}; }

ArcClass embed_omega(const OmegaArcClass& s, std::optional<ComplexityBound> bound) {
  Vec2 w;
  if (integral_family(s.family)) {
    std::int64_t j = s.tau.twice / 2;
    w = {2 * j + 1, 2 * j};
  } else {
    std::int64_t i = (-s.tau.twice - 1) / 2;
    w = {2 * i, 2 * i + 1};
  }
  ArcClass x = segment(bottom(s.family), top(s.family), w);
  if (bound && x.complexity() > bound->n)
    throw DomainError("tau " + to_string(s.tau) + " lies outside the window of bound " +
                      std::to_string(bound->n));
  return x;
}

std::optional<OmegaArcClass> omega_coordinates(const ArcClass& x) {
  if (x.is_loop()) return std::nullopt;
  bool first_bottom = x.first == Puncture::a || x.first == Puncture::d;
  bool second_bottom = x.second == Puncture::a || x.second == Puncture::d;
  if (first_bottom == second_bottom) return std::nullopt;
  Puncture lo = first_bottom ? x.first : x.second;
  Puncture hi = first_bottom ? x.second : x.first;
  OmegaFamily f = lo == Puncture::a ? (hi == Puncture::b ? OmegaFamily::a_b : OmegaFamily::a_c)
                                    : (hi == Puncture::b ? OmegaFamily::d_b : OmegaFamily::d_c);
  for (int s : {1, -1}) {
    std::int64_t u = s * x.vec.u, v = s * x.vec.v;
    std::optional<OmegaArcClass> out;
    if (integral_family(f) && u == v + 1 && v % 2 == 0) out = OmegaArcClass{f, HalfInt{v}};
    if (!integral_family(f) && v == u + 1 && u % 2 == 0) out = OmegaArcClass{f, HalfInt{-u - 1}};
    if (out && embed_omega(*out) == x) return out;
  }
  return std::nullopt;
}

std::string to_string(TauStar t) { return std::to_string(t.quarters) + "/4"; }

ArcClass j1_base() { return omega_cut()[0]; }
ArcClass j1_phi() { return omega_cut()[1]; }

SymmetryElement half_twist_bc() { return make_symmetry({2, -1, 1, 0}); }

ArcClass ad_arc(std::int64_t m) { return segment(Puncture::a, Puncture::d, {2 * m + 1, 2 * m - 1}); }

std::vector<OmegaArcClass> co_arcs(const ArcClass& sigma, ComplexityBound bound) {
  std::vector<OmegaArcClass> out;
  for (const auto& x : arc_universe(bound)) {
    if (x.is_loop()) continue;
    auto s = omega_coordinates(x);
    if (s && intersect(sigma, x) == 0) out.push_back(*s);
  }
  return out;
}

TauStar tau_star(const ArcClass& sigma, ComplexityBound bound) {
  if (sigma.is_loop() || sigma.first != Puncture::a || sigma.second != Puncture::d)
    throw DomainError("tau* needs an a-d segment");
  if (sigma == j1_base() || intersect(sigma, j1_base()) != 0)
    throw DomainError("tau* needs an a-d arc disjoint from and distinct from ad(1,1)");
  auto cos = co_arcs(sigma, bound);
  if (cos.size() != 4)
    throw DomainError("found " + std::to_string(cos.size()) + " co-arcs for " + to_string(sigma) +
                      "; enlarge the bound");
  std::int64_t twice = 0;
  for (const auto& s : cos) twice += s.tau.twice;
  if (twice % 2 != 0 || (twice / 2) % 2 == 0) throw std::logic_error("tau* outside Z/2 + 1/4");
  return {twice / 2};
}

std::string to_string(Fraction f) {
  if (f.den == 1) return std::to_string(f.num);
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

const char* status_name(ReconciliationStatus s) {
  switch (s) {
    case ReconciliationStatus::confirmed: return "confirmed";
    case ReconciliationStatus::reconciled: return "reconciled";
    case ReconciliationStatus::unresolved: return "unresolved";
  }
  return "unknown";
}

namespace {

Fraction to_fraction(Rational r) { return {r.numerator(), r.denominator()}; }
Rational to_rational(Fraction f) { return Rational(f.num, f.den); }

void settle(FormulaReconciliation& f) {
  bool exact = std::all_of(f.rows.begin(), f.rows.end(),
                           [](const ReconciliationRow& r) { return r.formula == r.engine; });
  if (exact) {
    f.status = ReconciliationStatus::confirmed;
    return;
  }
  // Fit engine = slope * distance + offset through the two extreme distances.
  auto lo = std::min_element(f.rows.begin(), f.rows.end(), [](const auto& p, const auto& q) {
    return to_rational(p.distance) < to_rational(q.distance);
  });
  auto hi = std::max_element(f.rows.begin(), f.rows.end(), [](const auto& p, const auto& q) {
    return to_rational(p.distance) < to_rational(q.distance);
  });
  f.mismatches = static_cast<std::size_t>(std::count_if(
      f.rows.begin(), f.rows.end(), [](const ReconciliationRow& r) { return r.formula != r.engine; }));
  if (lo == f.rows.end() || to_rational(lo->distance) == to_rational(hi->distance)) return;
  Rational slope = Rational(hi->engine - lo->engine) / (to_rational(hi->distance) - to_rational(lo->distance));
  Rational offset = Rational(lo->engine) - slope * to_rational(lo->distance);
  bool fits = std::all_of(f.rows.begin(), f.rows.end(), [&](const ReconciliationRow& r) {
    return slope * to_rational(r.distance) + offset == Rational(r.engine);
  });
  if (!fits) return;
  f.status = ReconciliationStatus::reconciled;
  f.slope = to_fraction(slope);
  f.offset = to_fraction(offset);
}

}  // namespace

ReconciliationReport reconcile_tau_star_formulas(ComplexityBound bound) {
  ReconciliationReport rep;
  rep.bound = bound.n;
  rep.m_min = -3;
  rep.m_max = 4;
  rep.tau_window = HalfInt::integer(3);
  rep.disk_choice = "the half twist acts about a disk enclosing b and c";

  std::map<std::int64_t, TauStar> stars;
  for (std::int64_t m = rep.m_min; m <= rep.m_max; ++m) {
    ArcClass s = ad_arc(m);
    if (s.complexity() > bound.n) throw DomainError("reconciliation window exceeds the bound");
    stars[m] = tau_star(s, bound);
  }

  rep.ad_ad.id = "ad_ad";
  rep.ad_ad.statement = "|s1 n s2| = 2|tau*(s1) - tau*(s2)| + 1 for distinct a-d arcs disjoint from J0";
  for (auto i = stars.begin(); i != stars.end(); ++i) {
    for (auto j = std::next(i); j != stars.end(); ++j) {
      std::int64_t dq = std::llabs(i->second.quarters - j->second.quarters);
      ReconciliationRow r{ad_arc(i->first), ad_arc(j->first), to_fraction(Rational(dq, 4)), dq / 2 + 1,
                          intersect(ad_arc(i->first), ad_arc(j->first))};
      rep.ad_ad.rows.push_back(r);
    }
  }
  settle(rep.ad_ad);

  rep.ad_bc.id = "ad_bc";
  rep.ad_bc.statement = "|s n g| = 2|tau*(s) - tau(g)| - 1/2 for an a-d arc s and an Omega arc g";
  std::set<HalfInt> permissible;
  const OmegaFamily fams[] = {OmegaFamily::a_b, OmegaFamily::a_c, OmegaFamily::d_b, OmegaFamily::d_c};
  for (auto& [m, star] : stars) {
    for (OmegaFamily f : fams) {
      for (std::int64_t t = -rep.tau_window.twice; t <= rep.tau_window.twice; ++t) {
        if ((t % 2 == 0) != integral_family(f)) continue;
        OmegaArcClass g{f, HalfInt{t}};
        ArcClass gx = embed_omega(g);
        std::int64_t dq = std::llabs(star.quarters - 2 * t);
        ReconciliationRow r{ad_arc(m), gx, to_fraction(Rational(dq, 4)), (dq - 1) / 2, intersect(ad_arc(m), gx)};
        rep.ad_bc.rows.push_back(r);
        if (star.quarters == 1 && r.engine <= 1) permissible.insert(g.tau);
      }
    }
  }
  settle(rep.ad_bc);
  rep.permissible_at_quarter.assign(permissible.begin(), permissible.end());
  return rep;
}

}  // namespace arcsys
