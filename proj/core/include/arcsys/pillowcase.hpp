#pragma once

// Arcs on the four-punctured sphere, modelled as the pillowcase
// (R^2 / Z^2) / (x -> -x) with punctures at the half-lattice points.
//
// Lattice points are stored doubled so everything stays integral:
// a = (0,0), b = (1,0), c = (0,1), d = (1,1), i.e. index = x2 + 2*y2.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arcsys {

enum class Puncture : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

inline constexpr std::array<Puncture, 4> kPunctures{Puncture::a, Puncture::b,
                                                    Puncture::c, Puncture::d};

constexpr int index_of(Puncture p) { return static_cast<int>(p); }
constexpr Puncture puncture_at(int i) { return static_cast<Puncture>(i & 3); }

char label_of(Puncture p);
std::optional<Puncture> parse_puncture(char c);

struct HalfPoint {
  int x2 = 0;
  int y2 = 0;
  friend bool operator==(const HalfPoint&, const HalfPoint&) = default;
};

constexpr HalfPoint lattice_point(Puncture p) {
  return {index_of(p) & 1, index_of(p) >> 1};
}

// Any doubled point with integer coordinates reduces to a puncture mod 2.
constexpr Puncture puncture_of(HalfPoint h) {
  return puncture_at(((h.x2 % 2 + 2) % 2) + 2 * ((h.y2 % 2 + 2) % 2));
}

struct Vec2 {
  std::int64_t u = 0;
  std::int64_t v = 0;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

constexpr std::int64_t det(Vec2 x, Vec2 y) { return x.u * y.v - x.v * y.u; }
std::int64_t complexity(Vec2 w);
bool is_primitive(Vec2 w);
bool is_sign_normalized(Vec2 w);
Vec2 sign_normalized(Vec2 w);

// Parity pattern (u mod 2) + 2 (v mod 2); equals index(p) xor index(q) for an
// arc class joining p and q.
int parity_index(Vec2 w);

enum class ArcKind : std::uint8_t { segment = 0, loop = 1 };

// One homotopy class of simple essential arc.
//   segment: first < second are the endpoints, vec the slope
//   loop:    first is the base, second the enclosed puncture, vec the slope of
//            the base--enclosed segment whose neighbourhood boundary it is
struct ArcClass {
  ArcKind kind = ArcKind::segment;
  Puncture first = Puncture::a;
  Puncture second = Puncture::b;
  Vec2 vec{1, 0};

  bool is_loop() const { return kind == ArcKind::loop; }
  Puncture base() const { return first; }
  Puncture enclosed() const { return second; }
  // The segment a loop runs around; a segment is its own core.
  ArcClass core() const;
  std::int64_t complexity() const { return arcsys::complexity(vec); }

  friend auto operator<=>(const ArcClass&, const ArcClass&) = default;
};

// Normalizing constructors; throw DomainError on an invalid class.
ArcClass segment(Puncture p, Puncture q, Vec2 w);
ArcClass loop(Puncture base, Puncture enclosed, Vec2 w);

// Endpoints with multiplicity; a loop yields {base, base}.
std::array<Puncture, 2> endpoints(const ArcClass& x);

enum class Violation {
  endpoints,
  primitivity,
  parity,
  sign_normalization,
};

const char* violation_name(Violation v);

// First violated invariant, or nullopt.
std::optional<Violation> validate(const ArcClass& x);

struct ComplexityBound {
  int n = 1;
  explicit ComplexityBound(int value);
};

// Every segment and loop with complexity <= n, sorted.
std::vector<ArcClass> arc_universe(ComplexityBound bound);

// Arcs with complexity exactly m (one shell of the universe), sorted.
std::vector<ArcClass> arc_shell(int m);

// Compact text form, e.g. "ab(1,0)" or "L a|b(1,0)".
std::string to_string(const ArcClass& x);
std::string to_string(Vec2 w);

}  // namespace arcsys
