#include "arcsys/symmetry.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "arcsys/error.hpp"

namespace arcsys {

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Vec2 operator*(const Mat2& m, Vec2 w) { return {m.a * w.u + m.b * w.v, m.c * w.u + m.d * w.v}; }

Mat2 inverse(const Mat2& m) {
  std::int64_t s = det(m);
  if (s != 1 && s != -1) throw DomainError("matrix is not invertible over Z");
  return {m.d * s, -m.b * s, -m.c * s, m.a * s};
}

namespace {

int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

HalfPoint act(const SymmetryElement& g, HalfPoint h) {
  Vec2 w = g.linear * Vec2{h.x2, h.y2};
  return {mod2(w.u + g.shift.x2), mod2(w.v + g.shift.y2)};
}

}  // namespace

SymmetryElement make_symmetry(Mat2 linear, HalfPoint shift) {
  std::int64_t s = det(linear);
  if (s != 1 && s != -1) throw DomainError("symmetry linear part must have determinant +-1");
  if (shift.x2 < 0 || shift.x2 > 1 || shift.y2 < 0 || shift.y2 > 1)
    throw DomainError("symmetry shift must lie in {0,1/2}^2");
  return {linear, shift};
}

SymmetryElement identity_symmetry() { return {}; }

SymmetryElement operator*(const SymmetryElement& g, const SymmetryElement& h) {
  HalfPoint t = act(g, h.shift);
  return {g.linear * h.linear, t};
}

SymmetryElement inverse(const SymmetryElement& g) {
  Mat2 li = inverse(g.linear);
  Vec2 t = li * Vec2{g.shift.x2, g.shift.y2};
  return {li, {mod2(-t.u), mod2(-t.v)}};
}

Puncture apply_symmetry(const SymmetryElement& g, Puncture p) {
  return puncture_of(act(g, lattice_point(p)));
}

ArcClass apply_symmetry(const SymmetryElement& g, const ArcClass& x) {
  Puncture p = apply_symmetry(g, x.first);
  Puncture q = apply_symmetry(g, x.second);
  Vec2 w = g.linear * x.vec;
  return x.is_loop() ? loop(p, q, w) : segment(p, q, w);
}

std::vector<ArcClass> apply_symmetry(const SymmetryElement& g, const std::vector<ArcClass>& xs) {
  std::vector<ArcClass> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(apply_symmetry(g, x));
  return out;
}

std::array<Puncture, 4> puncture_action(const SymmetryElement& g) {
  std::array<Puncture, 4> perm{};
  for (Puncture p : kPunctures) perm[index_of(p)] = apply_symmetry(g, p);
  return perm;
}

const std::vector<Generator>& generators() {
  static const std::vector<Generator> gens{
      {"twist_h", {{1, 2, 0, 1}, {}}},
      {"twist_v", {{1, 0, 2, 1}, {}}},
      {"half_twist_h", {{1, 1, 0, 1}, {}}},
      {"half_twist_v", {{1, 0, 1, 1}, {}}},
      {"swap_xy", {{0, 1, 1, 0}, {}}},
      {"flip_y", {{1, 0, 0, -1}, {}}},
      {"shift_x", {{}, {1, 0}}},
      {"shift_y", {{}, {0, 1}}},
  };
  return gens;
}

namespace {

enum : int { kTwistH, kTwistV, kHalfH, kHalfV, kSwap, kFlipY, kShiftX, kShiftY };

SymmetryElement power(const SymmetryElement& g, int k) {
  SymmetryElement base = k < 0 ? inverse(g) : g;
  SymmetryElement out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

void push(Word& w, int gen, std::int64_t k) {
  if (k == 0) return;
  if (!w.empty() && w.back().generator == gen) {
    w.back().power += static_cast<int>(k);
    if (w.back().power == 0) w.pop_back();
    return;
  }
  w.push_back({gen, static_cast<int>(k)});
}

}  // namespace

SymmetryElement evaluate(const Word& w) {
  SymmetryElement out;
  for (const auto& l : w) out = out * power(generators().at(l.generator).element, l.power);
  return out;
}

Word decompose(const SymmetryElement& g) {
  // Row-reduce the linear part with left shears and row swaps:
  // E_k ... E_1 M = D S^b, so M = E_1^-1 ... E_k^-1 D S^b.
  Mat2 m = g.linear;
  Word undo;  // E_1^-1, E_2^-1, ... in order
  while (m.c != 0) {
    if (std::llabs(m.a) >= std::llabs(m.c)) {
      std::int64_t q = m.a / m.c;
      m = Mat2{1, -q, 0, 1} * m;  // half_twist_h^-q
      push(undo, kHalfH, q);
    } else {
      m = Mat2{0, 1, 1, 0} * m;
      push(undo, kSwap, 1);
    }
  }
  Word w;
  // Translation acts last, so it sits leftmost.
  push(w, kShiftX, g.shift.x2);
  push(w, kShiftY, g.shift.y2);
  for (const auto& l : undo) push(w, l.generator, l.power);
  // Now m = [[s1, b], [0, s2]] = diag(s1, s2) [[1, s1 b], [0, 1]].
  std::int64_t s1 = m.a, s2 = m.d;
  if (s2 == -1) push(w, kFlipY, 1);
  if (s1 == -1) {
    push(w, kSwap, 1);
    push(w, kFlipY, 1);
    push(w, kSwap, 1);
  }
  push(w, kHalfH, s1 * m.b);
  // Swaps are involutions; fold even powers away.
  Word folded;
  for (const auto& l : w) {
    int p = l.power;
    if (l.generator == kSwap || l.generator == kFlipY || l.generator == kShiftX || l.generator == kShiftY)
      p = ((p % 2) + 2) % 2;
    push(folded, l.generator, p);
  }
  if (!(evaluate(folded) == g)) throw std::logic_error("word decomposition failed");
  return folded;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "id";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << generators().at(w[i].generator).name;
    if (w[i].power != 1) os << '^' << w[i].power;
  }
  return os.str();
}

}  // namespace arcsys
