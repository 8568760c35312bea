#pragma once

// Twisting coordinates.
//
// The annulus Omega is the complement of the cut pair
//   J_Omega = { ad(1,1), bc(1,1) }.
// Arcs crossing it run from {a,d} to {b,c}; tau is a half-integer:
//   a-b, d-c with slope (2j+1, 2j)   have tau = j
//   a-c, d-b with slope (2i, 2i+1)   have tau = -i - 1/2
// One positive Dehn twist about the core of Omega shifts tau by 1.
//
// For an a-d arc sigma disjoint from ad(1,1), tau*(sigma) is the mean tau of
// the four Omega arcs disjoint from sigma; it lies in Z/2 + 1/4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcsys/pillowcase.hpp"
#include "arcsys/symmetry.hpp"

namespace arcsys {

// A value in Z/2, stored doubled.
struct HalfInt {
  std::int64_t twice = 0;
  static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt{t}; }
  static constexpr HalfInt integer(std::int64_t n) { return HalfInt{2 * n}; }
  bool is_integer() const { return twice % 2 == 0; }
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};
std::string to_string(HalfInt h);

enum class OmegaFamily : std::uint8_t { a_b, a_c, d_b, d_c };

Puncture bottom(OmegaFamily f);
Puncture top(OmegaFamily f);
// a_b and d_c carry integer tau; a_c and d_b carry tau in Z + 1/2.
bool integral_family(OmegaFamily f);
std::string to_string(OmegaFamily f);

struct OmegaArcClass {
  OmegaFamily family = OmegaFamily::a_b;
  HalfInt tau{};
  friend auto operator<=>(const OmegaArcClass&, const OmegaArcClass&) = default;
};

// Throws DomainError if the tau parity does not match the family.
OmegaArcClass omega_arc(OmegaFamily f, HalfInt tau);

// |tau1 - tau2| - eta/2; throws DomainError when that is negative or not an
// integer, or when s1 == s2.
int tau_intersect(const OmegaArcClass& s1, const OmegaArcClass& s2);

std::array<ArcClass, 2> omega_cut();
Mat2 omega_twist();  // [[3,-2],[2,-1]]

// Throws DomainError if the image has complexity above the bound.
ArcClass embed_omega(const OmegaArcClass& s, std::optional<ComplexityBound> bound = std::nullopt);
// Inverse of embed_omega on arcs disjoint from the cut; nullopt otherwise.
std::optional<OmegaArcClass> omega_coordinates(const ArcClass& x);

// tau* stored as 4 * value, always odd.
struct TauStar {
  std::int64_t quarters = 1;
  friend auto operator<=>(const TauStar&, const TauStar&) = default;
};
std::string to_string(TauStar t);

// The |J| = 1 context: J0 = ad(1,1) and phi = bc(1,1), i.e. the same pair as
// omega_cut().
ArcClass j1_base();
ArcClass j1_phi();

// Half twist about the boundary of a disk around {b, c}; it swaps b and c,
// fixes ad(1,1) and raises tau* by 1/2.
SymmetryElement half_twist_bc();

// a-d arc with slope (2m+1, 2m-1); all of them are disjoint from J0.
ArcClass ad_arc(std::int64_t m);

// Throws DomainError unless sigma is an a-d segment disjoint from J0 whose
// co-arc count in the universe at `bound` is exactly four.
TauStar tau_star(const ArcClass& sigma, ComplexityBound bound = ComplexityBound(12));
std::vector<OmegaArcClass> co_arcs(const ArcClass& sigma, ComplexityBound bound);

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};
std::string to_string(Fraction f);

struct ReconciliationRow {
  ArcClass x;
  ArcClass y;
  Fraction distance;  // |tau*(x) - tau*(y)| or |tau*(x) - tau(y)|
  std::int64_t formula = 0;
  std::int64_t engine = 0;
};

enum class ReconciliationStatus { confirmed, reconciled, unresolved };
const char* status_name(ReconciliationStatus s);

struct FormulaReconciliation {
  std::string id;
  std::string statement;
  ReconciliationStatus status = ReconciliationStatus::unresolved;
  // engine = slope * distance + offset over every row when reconciled
  Fraction slope;
  Fraction offset;
  std::size_t mismatches = 0;
  std::vector<ReconciliationRow> rows;
};

struct ReconciliationReport {
  int bound = 12;
  std::int64_t m_min = 0;
  std::int64_t m_max = 0;
  HalfInt tau_window{};
  std::string disk_choice;
  FormulaReconciliation ad_ad;
  FormulaReconciliation ad_bc;
  // tau values of Omega arcs meeting the tau* = 1/4 arc at most once
  std::vector<HalfInt> permissible_at_quarter;
};

// Window: a-d arcs ad_arc(m) for m in [-3, 4] (eight consecutive tau*
// classes) against each other and against Omega arcs with |tau| <= 3.
ReconciliationReport reconcile_tau_star_formulas(ComplexityBound bound = ComplexityBound(12));

}  // namespace arcsys
