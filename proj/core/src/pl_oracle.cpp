#include "arcsys/pl_oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

namespace arcsys {

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

struct P {
  i64 x;
  i64 y;
};

struct Piece {
  P a;
  P b;
};

struct Degenerate {};

struct Frame {
  i64 fan_len;    // delta * L
  i64 strip_unit; // eps * L / (4 + k)
  i64 scale;      // L
};

int sign_of(i128 v) { return (v > 0) - (v < 0); }

int orient(P a, P b, P c) {
  i128 v = static_cast<i128>(b.x - a.x) * (c.y - a.y) - static_cast<i128>(b.y - a.y) * (c.x - a.x);
  return sign_of(v);
}

bool within(P a, P b, P c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

Frame make_frame(i64 n, OracleParams params) {
  i64 d = 16 * n * n * params.fan_scale;
  i64 e = 16 * n * n * d * params.strip_scale;
  const i64 limit = std::numeric_limits<i64>::max() / (16 * (n + 2));
  if (d <= 0 || e <= 0 || e > limit / (8 * d)) throw std::logic_error("oracle scale overflow");
  return {8 * e, d, 8 * d * e};
}

P at(P o, Vec2 w, i64 t) { return {o.x + w.u * t, o.y + w.v * t}; }

std::vector<std::vector<P>> lift(const ArcClass& x, const Frame& f) {
  HalfPoint h = lattice_point(x.first);
  P o{h.x2 * (f.scale / 2), h.y2 * (f.scale / 2)};
  Vec2 w = x.vec;
  if (!x.is_loop()) return {{o, at(o, w, f.scale / 2), at(o, w, f.scale)}};
  Vec2 nrm{-w.v, w.u};
  i64 eps = (4 + index_of(x.first)) * f.strip_unit;
  std::vector<std::vector<P>> strands;
  for (int s : {1, -1}) {
    P head = at(at(o, w, f.fan_len), nrm, s * eps);
    P tail = at(at(o, w, f.scale - f.fan_len), nrm, s * eps);
    strands.push_back({o, head, tail, at(o, w, f.scale)});
  }
  return strands;
}

std::vector<Piece> pieces(const std::vector<std::vector<P>>& lines) {
  std::vector<Piece> out;
  for (const auto& l : lines) {
    for (std::size_t i = 0; i + 1 < l.size(); ++i) out.push_back({l[i], l[i + 1]});
  }
  return out;
}

bool half_lattice(P p, i64 half) { return p.x % half == 0 && p.y % half == 0; }

// 1 for a transverse interior crossing, 0 for none or a meeting at a
// puncture; throws Degenerate for anything else.
int crossing(Piece s, Piece t, i64 half) {
  int o1 = orient(s.a, s.b, t.a);
  int o2 = orient(s.a, s.b, t.b);
  int o3 = orient(t.a, t.b, s.a);
  int o4 = orient(t.a, t.b, s.b);
  if (o1 && o2 && o3 && o4) return (o1 != o2 && o3 != o4) ? 1 : 0;
  if (!o1 && !o2) {
    // Collinear; only a single shared puncture endpoint is acceptable.
    std::array<P, 4> cand{t.a, t.b, s.a, s.b};
    int touches = 0;
    for (int i = 0; i < 4; ++i) {
      const Piece& other = i < 2 ? s : t;
      if (within(other.a, other.b, cand[i])) {
        if (!half_lattice(cand[i], half)) throw Degenerate{};
        ++touches;
      }
    }
    if (touches == 0) return 0;
    // Overlap longer than a point would touch at two distinct points.
    bool shared = (s.a.x == t.a.x && s.a.y == t.a.y) || (s.a.x == t.b.x && s.a.y == t.b.y) ||
                  (s.b.x == t.a.x && s.b.y == t.a.y) || (s.b.x == t.b.x && s.b.y == t.b.y);
    if (!shared || touches != 2) throw Degenerate{};
    return 0;
  }
  auto touch = [&](int o, P p, const Piece& other) {
    if (o == 0 && within(other.a, other.b, p) && !half_lattice(p, half)) throw Degenerate{};
  };
  touch(o1, t.a, s);
  touch(o2, t.b, s);
  touch(o3, s.a, t);
  touch(o4, s.b, t);
  return 0;
}

i64 floor_div(i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

i64 torus_count(const std::vector<Piece>& xs, const std::vector<Piece>& ys, i64 scale) {
  i64 half = scale / 2;
  i64 total = 0;
  for (const Piece& s : xs) {
    i64 sx0 = std::min(s.a.x, s.b.x), sx1 = std::max(s.a.x, s.b.x);
    i64 sy0 = std::min(s.a.y, s.b.y), sy1 = std::max(s.a.y, s.b.y);
    for (const Piece& t : ys) {
      i64 tx0 = std::min(t.a.x, t.b.x), tx1 = std::max(t.a.x, t.b.x);
      i64 ty0 = std::min(t.a.y, t.b.y), ty1 = std::max(t.a.y, t.b.y);
      for (i64 mx = ceil_div(sx0 - tx1, scale); mx <= floor_div(sx1 - tx0, scale); ++mx) {
        for (i64 my = ceil_div(sy0 - ty1, scale); my <= floor_div(sy1 - ty0, scale); ++my) {
          Piece u{{t.a.x + mx * scale, t.a.y + my * scale}, {t.b.x + mx * scale, t.b.y + my * scale}};
          total += crossing(s, u, half);
        }
      }
    }
  }
  return total;
}

}  // namespace

int pl_crossings(const ArcClass& x, const ArcClass& y, OracleParams params) {
  static constexpr std::array<std::array<i64, 2>, 5> kRetries{{{1, 1}, {1, 3}, {3, 1}, {2, 5}, {5, 7}}};
  i64 n = std::max(x.complexity(), y.complexity());
  for (auto r : kRetries) {
    Frame f = make_frame(n, {params.fan_scale * r[0], params.strip_scale * r[1]});
    try {
      i64 total = torus_count(pieces(lift(x, f)), pieces(lift(y, f)), f.scale);
      if (total % 2 != 0) throw std::logic_error("odd torus crossing count for " + to_string(x) +
                                                 " vs " + to_string(y));
      return static_cast<int>(total / 2);
    } catch (const Degenerate&) {
      continue;
    }
  }
  throw std::logic_error("degenerate oracle configuration for " + to_string(x) + " vs " +
                         to_string(y));
}

}  // namespace arcsys
