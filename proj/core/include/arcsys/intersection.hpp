#pragma once

#include <cstdint>

#include "arcsys/pillowcase.hpp"

namespace arcsys {

// Common endpoints counted as a multiset intersection (a loop is {base, base}).
int shared_endpoints(const ArcClass& x, const ArcClass& y);

// Geometric intersection number in minimal position (closed form).
// intersect(x, x) == 0 by convention.
int intersect(const ArcClass& x, const ArcClass& y);

// Independent piecewise-linear count on the torus cover; see pl_oracle.hpp.
int oracle_intersect(const ArcClass& x, const ArcClass& y);

namespace testing {
// Corrupts the closed form for segment pairs with |det| == 3 so fault
// handling can be exercised end to end. Off by default.
void set_closed_form_fault(bool enabled);
bool closed_form_fault();
}  // namespace testing

}  // namespace arcsys
