#pragma once

// Auxiliary surfaces, modelled without the pillowcase.
//
// D_n, the once-punctured n-gon, is studied in its infinite cyclic cover: the
// upper half plane with vertex lifts at the integers, deck translation
// x -> x + n and the puncture at the cusp. A vertex-to-vertex class is a lift
// [X, X + span]; span = n is the loop around the puncture and span = 1 is a
// boundary edge. A vertex-to-puncture class is the vertical ray above X.

#include <cstdint>
#include <string>
#include <vector>

#include "arcsys/system.hpp"
#include "arcsys/twist.hpp"

namespace arcsys {

struct PolygonArcClass {
  enum class Kind : std::uint8_t { vertex_vertex, vertex_puncture };
  int n = 1;
  Kind kind = Kind::vertex_puncture;
  int start = 0;  // vertex index in [0, n)
  int span = 0;   // lift offset difference; 0 for vertex_puncture

  bool is_loop() const { return kind == Kind::vertex_vertex && span == n; }
  friend auto operator<=>(const PolygonArcClass&, const PolygonArcClass&) = default;
};

std::string to_string(const PolygonArcClass& x);

// Simple essential classes with span <= w_max (loops included when
// w_max >= n). Throws DomainError unless n in [1,4] and w_max >= 2.
std::vector<PolygonArcClass> dn_universe(int n, int w_max);

// Interleaving count over deck translates; x vs x gives 0.
int dn_intersect(const PolygonArcClass& x, const PolygonArcClass& y);

struct PolygonMaxResult {
  int n = 0;
  int max_size = 0;
  int max_size_without_loops = 0;
  int max_size_with_loop = 0;  // 0 when no maximum family uses a loop
  int stable_window = 0;       // first w_max after which the maximum stopped moving
  std::vector<std::vector<PolygonArcClass>> witnesses;  // all maximum families
};

PolygonMaxResult dn_max_1_system(int n);

// Omega arcs with |tau| <= tau_max in all four families, sorted.
std::vector<OmegaArcClass> omega_universe(HalfInt tau_max);

struct OmegaSystemClass {
  std::vector<OmegaArcClass> representative;  // canonical under the annulus symmetries
  DegreeVector degrees;                       // family plus the two cut arcs
  std::size_t members = 0;
  std::string label;                          // "F" for (6,6,4,4), "G" for (5,5,5,5)
};

// Largest pairwise-<=1 families of Omega arcs with |tau| <= 4, up to
// tau -> +-tau + s and label permutations preserving {{a,d},{b,c}}.
std::vector<OmegaSystemClass> omega_loopfree_max_systems();

// Canonical form of an Omega family under the annulus symmetries.
std::vector<OmegaArcClass> omega_canonical(const std::vector<OmegaArcClass>& family);

}  // namespace arcsys
