#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcsys/symmetry.hpp"
#include "arcsys/system.hpp"

namespace arcsys {

struct Canonical {
  ArcSystem system;          // == apply_symmetry(witness, input)
  SymmetryElement witness;
};

// Orbit minimum under the full affine group, keyed by total complexity and
// then the sorted arc list. For each ordered pair of non-parallel arcs (x, y)
// the maps sending x to slope (1,0) and reducing y's slope form a finite,
// equivariant candidate set; the minimum over all candidates is canonical.
Canonical canonicalize_with_witness(const ArcSystem& s);
ArcSystem canonicalize(const ArcSystem& s);

std::int64_t total_complexity(const std::vector<ArcClass>& arcs);

struct Fingerprint {
  int j_size = 0;
  DegreeVector system_degrees;
  DegreeVector j_degrees;
  int loop_count = 0;
  DegreeVector nonloop_degrees;
  int j_components = 0;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const ArcSystem& s);
std::string to_string(const Fingerprint& f);

struct OrbitClass {
  ArcSystem representative;
  Fingerprint fingerprint;
  std::size_t members = 0;
  std::string label;  // empty when unassigned
};

// Partition by canonical form; classes come out sorted by representative.
std::vector<OrbitClass> classify(const std::vector<ArcSystem>& systems);

// Labels for maximal 1-systems from fingerprints: J_3a/J_3b by Gamma_J shape,
// J_2a/J_2b by degrees (10,6,4,4)/(10,5,5,4), J_1 and J_0 by |J|, and the
// disconnected |J| = 2 classes by their non-loop degrees: (5,5,5,5) is J_2e,
// (6,6,4,4) is the pair J_2c/J_2d, which fingerprints cannot order.
// Ambiguous assignments get a group label joined by '/'.
void match_labels(std::vector<OrbitClass>& classes);

// Copies labels from labelled reference systems with the same canonical form.
// Returns the number of classes that received a label.
std::size_t match_reference_labels(std::vector<OrbitClass>& classes,
                                   const std::vector<std::pair<ArcSystem, std::string>>& references);

}  // namespace arcsys
