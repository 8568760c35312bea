#include "arcsys/intersection.hpp"

#include <atomic>
#include <cstdlib>

#include "arcsys/pl_oracle.hpp"

namespace arcsys {

namespace {

std::atomic<bool> g_fault{false};

bool contains(const std::array<Puncture, 2>& e, Puncture p) { return e[0] == p || e[1] == p; }

int segment_pair(const ArcClass& x, const ArcClass& y) {
  if (x == y) return 0;
  auto d = std::llabs(det(x.vec, y.vec));
  int value = static_cast<int>((d - shared_endpoints(x, y)) / 2);
  if (g_fault.load(std::memory_order_relaxed) && d == 3) value += 1;
  return value;
}

int segment_loop(const ArcClass& s, const ArcClass& l) {
  ArcClass core = l.core();
  if (core == s) return 0;
  return 2 * segment_pair(core, s) + (contains(endpoints(s), l.enclosed()) ? 1 : 0);
}

int loop_loop(const ArcClass& x, const ArcClass& y) {
  if (x == y) return 0;
  ArcClass cx = x.core();
  ArcClass cy = y.core();
  if (cx == cy) return 2;
  int hugged = 0;
  for (Puncture r : endpoints(cx)) {
    if (contains(endpoints(cy), r) && (r == x.enclosed() || r == y.enclosed())) ++hugged;
  }
  return 4 * segment_pair(cx, cy) + 2 * hugged;
}

}  // namespace

int shared_endpoints(const ArcClass& x, const ArcClass& y) {
  auto ex = endpoints(x);
  auto ey = endpoints(y);
  int count = 0;
  bool used[2] = {false, false};
  for (Puncture p : ex) {
    for (int j = 0; j < 2; ++j) {
      if (!used[j] && ey[j] == p) {
        used[j] = true;
        ++count;
        break;
      }
    }
  }
  return count;
}

int intersect(const ArcClass& x, const ArcClass& y) {
  if (!x.is_loop() && !y.is_loop()) return segment_pair(x, y);
  if (!x.is_loop()) return segment_loop(x, y);
  if (!y.is_loop()) return segment_loop(y, x);
  return loop_loop(x, y);
}

int oracle_intersect(const ArcClass& x, const ArcClass& y) {
  if (x == y) return 0;
  return pl_crossings(x, y);
}

namespace testing {
void set_closed_form_fault(bool enabled) { g_fault.store(enabled); }
bool closed_form_fault() { return g_fault.load(); }
}  // namespace testing

}  // namespace arcsys
