#pragma once

#include "arcsys/pillowcase.hpp"

namespace arcsys::test {

inline ArcClass seg(Puncture p, Puncture q, std::int64_t u, std::int64_t v) { return segment(p, q, {u, v}); }

constexpr Puncture A = Puncture::a;
constexpr Puncture B = Puncture::b;
constexpr Puncture C = Puncture::c;
constexpr Puncture D = Puncture::d;

}  // namespace arcsys::test

#include <stdexcept>
#include <string>
#include <vector>

#include "arcsys/records.hpp"

namespace arcsys::test {

inline const std::vector<SystemRecord>& references() {
  static const std::vector<SystemRecord> r = systems_from_json(read_text_file(ARCSYS_TEST_REFERENCES));
  return r;
}

inline const ArcSystem& reference(const std::string& name) {
  for (const auto& r : references())
    if (r.name == name) return r.system;
  throw std::runtime_error("no reference named " + name);
}

}  // namespace arcsys::test
