#include "setfrac/interval.hpp"

#include <algorithm>
#include <cmath>

#include "setfrac/format.hpp"

namespace setfrac {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidArgument("interval endpoints must be finite, got [" +
                          format_real(lo) + ", " + format_real(hi) + "]");
  }
  if (lo > hi) {
    throw InvalidArgument("interval requires lo <= hi, got [" +
                          format_real(lo) + ", " + format_real(hi) + "]");
  }
}

double hausdorff(const Interval& a, const Interval& b) noexcept {
  return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

double hausdorff_to_zero(const Interval& a) noexcept {
  return std::max(std::abs(a.lo()), std::abs(a.hi()));
}

bool contains(const Interval& a, double x) noexcept {
  return a.lo() <= x && x <= a.hi();
}

Interval convex_combo(const Interval& a, const Interval& b, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InvalidArgument("convex_combo requires lambda in [0, 1], got " +
                          format_real(lambda));
  }
  const double mu = 1.0 - lambda;
  // lo <= hi is preserved by nonnegative weights; clamp guards roundoff.
  const double lo = lambda * a.lo() + mu * b.lo();
  const double hi = lambda * a.hi() + mu * b.hi();
  return Interval(lo, std::max(lo, hi));
}

std::string to_string(const Interval& a) {
  return "[" + format_real(a.lo()) + ", " + format_real(a.hi()) + "]";
}

}  // namespace setfrac
