#include "arcsys/pillowcase.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "arcsys/error.hpp"

namespace arcsys {

char label_of(Puncture p) { return static_cast<char>('a' + index_of(p)); }

std::optional<Puncture> parse_puncture(char c) {
  if (c < 'a' || c > 'd') return std::nullopt;
  return puncture_at(c - 'a');
}

std::int64_t complexity(Vec2 w) { return std::max(std::llabs(w.u), std::llabs(w.v)); }

bool is_primitive(Vec2 w) { return std::gcd(w.u, w.v) == 1; }

bool is_sign_normalized(Vec2 w) { return w.u > 0 || (w.u == 0 && w.v > 0); }

Vec2 sign_normalized(Vec2 w) { return is_sign_normalized(w) ? w : Vec2{-w.u, -w.v}; }

int parity_index(Vec2 w) {
  return static_cast<int>((w.u & 1) + 2 * (w.v & 1));
}

ArcClass ArcClass::core() const {
  if (!is_loop()) return *this;
  ArcClass s{ArcKind::segment, std::min(first, second), std::max(first, second), vec};
  return s;
}

namespace {

ArcClass checked(ArcClass x) {
  if (auto v = validate(x)) {
    throw DomainError(std::string("invalid arc class ") + to_string(x) + ": " +
                      violation_name(*v));
  }
  return x;
}

}  // namespace

ArcClass segment(Puncture p, Puncture q, Vec2 w) {
  return checked({ArcKind::segment, std::min(p, q), std::max(p, q), sign_normalized(w)});
}

ArcClass loop(Puncture base, Puncture enclosed, Vec2 w) {
  return checked({ArcKind::loop, base, enclosed, sign_normalized(w)});
}

std::array<Puncture, 2> endpoints(const ArcClass& x) {
  if (x.is_loop()) return {x.first, x.first};
  return {x.first, x.second};
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::endpoints: return "endpoints";
    case Violation::primitivity: return "primitivity";
    case Violation::parity: return "parity";
    case Violation::sign_normalization: return "sign_normalization";
  }
  return "unknown";
}

std::optional<Violation> validate(const ArcClass& x) {
  if (x.first == x.second) return Violation::endpoints;
  if (x.kind == ArcKind::segment && x.second < x.first) return Violation::endpoints;
  if (!is_primitive(x.vec)) return Violation::primitivity;
  if (parity_index(x.vec) != (index_of(x.first) ^ index_of(x.second))) return Violation::parity;
  if (!is_sign_normalized(x.vec)) return Violation::sign_normalization;
  return std::nullopt;
}

ComplexityBound::ComplexityBound(int value) : n(value) {
  if (value < 1) throw DomainError("complexity bound must be >= 1");
}

namespace {

// Primitive sign-normalized vectors with max(|u|,|v|) in [lo, hi].
std::vector<Vec2> primitive_vectors(int lo, int hi) {
  std::vector<Vec2> out;
  for (int u = 0; u <= hi; ++u) {
    for (int v = -hi; v <= hi; ++v) {
      Vec2 w{u, v};
      auto c = complexity(w);
      if (c < lo || c > hi) continue;
      if (is_sign_normalized(w) && is_primitive(w)) out.push_back(w);
    }
  }
  return out;
}

std::vector<ArcClass> arcs_for(const std::vector<Vec2>& vecs) {
  std::vector<ArcClass> out;
  for (Vec2 w : vecs) {
    int par = parity_index(w);
    for (Puncture p : kPunctures) {
      Puncture q = puncture_at(index_of(p) ^ par);
      if (p < q) out.push_back({ArcKind::segment, p, q, w});
      out.push_back({ArcKind::loop, p, q, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ArcClass> arc_universe(ComplexityBound bound) {
  return arcs_for(primitive_vectors(1, bound.n));
}

std::vector<ArcClass> arc_shell(int m) {
  if (m < 1) throw DomainError("shell index must be >= 1");
  return arcs_for(primitive_vectors(m, m));
}

std::string to_string(Vec2 w) {
  std::ostringstream os;
  os << '(' << w.u << ',' << w.v << ')';
  return os.str();
}

std::string to_string(const ArcClass& x) {
  std::string s;
  if (x.is_loop()) {
    s = "L ";
    s += label_of(x.first);
    s += '|';
    s += label_of(x.second);
  } else {
    s += label_of(x.first);
    s += label_of(x.second);
  }
  return s + to_string(x.vec);
}

}  // namespace arcsys
