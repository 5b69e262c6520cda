#pragma once

#include <utility>

namespace barrier {

struct Minimum {
  double arg = 0.0;
  double value = 0.0;
};

/// Ternary search for a convex function on [lo, hi] until the bracket is
/// narrower than `tol`. Both endpoints are also evaluated so that a minimum
/// sitting on the boundary is returned exactly.
template <typename F>
Minimum minimize_convex(F&& f, double lo, double hi, double tol) {
  Minimum best{lo, f(lo)};
  if (hi <= lo) return best;
  if (const double v = f(hi); v < best.value) best = {hi, v};
  double a = lo;
  double b = hi;
  while (b - a > tol) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (f(m1) <= f(m2)) {
      b = m2;
    } else {
      a = m1;
    }
  }
  const double mid = 0.5 * (a + b);
  if (const double v = f(mid); v < best.value) best = {mid, v};
  return best;
}

}  // namespace barrier
