#pragma once

// Affine symmetries x -> M x + t of the pillowcase, M in GL(2,Z) and
// t in {0, 1/2}^2 (stored doubled). They permute the punctures and act on
// arc classes through the linear part.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "arcsys/pillowcase.hpp"

namespace arcsys {

struct Mat2 {
  std::int64_t a = 1, b = 0;
  std::int64_t c = 0, d = 1;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

constexpr std::int64_t det(const Mat2& m) { return m.a * m.d - m.b * m.c; }
Mat2 operator*(const Mat2& x, const Mat2& y);
Vec2 operator*(const Mat2& m, Vec2 w);
Mat2 inverse(const Mat2& m);  // requires det = +-1

struct SymmetryElement {
  Mat2 linear{};
  HalfPoint shift{};  // doubled, entries in {0,1}

  friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
};

// Throws DomainError unless det = +-1 and the shift is a half-lattice vector.
SymmetryElement make_symmetry(Mat2 linear, HalfPoint shift = {});

SymmetryElement identity_symmetry();
// (g * h)(x) = g(h(x))
SymmetryElement operator*(const SymmetryElement& g, const SymmetryElement& h);
SymmetryElement inverse(const SymmetryElement& g);

Puncture apply_symmetry(const SymmetryElement& g, Puncture p);
ArcClass apply_symmetry(const SymmetryElement& g, const ArcClass& x);
std::vector<ArcClass> apply_symmetry(const SymmetryElement& g, const std::vector<ArcClass>& xs);

// perm[i] = image of puncture i.
std::array<Puncture, 4> puncture_action(const SymmetryElement& g);

struct Generator {
  std::string name;
  SymmetryElement element;
};

// twist_h, twist_v, half_twist_h, half_twist_v, swap_xy, flip_y, shift_x,
// shift_y in that order.
const std::vector<Generator>& generators();

struct WordLetter {
  int generator = 0;  // index into generators()
  int power = 1;      // may be negative
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};
using Word = std::vector<WordLetter>;

// Product of the letters, leftmost applied last.
SymmetryElement evaluate(const Word& w);
// A word evaluating to g; the result is checked before returning.
Word decompose(const SymmetryElement& g);
std::string to_string(const Word& w);

}  // namespace arcsys
