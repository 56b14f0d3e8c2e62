#pragma once

#include <stdexcept>
#include <string>

namespace setfrac {

/// Raised when a value violates the documented preconditions of an operation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nonempty compact interval [lo, hi] of the real line.
///
/// Construction rejects lo > hi and non-finite endpoints; there is no silent
/// repair. Degenerate intervals (lo == hi) are valid and model single values.
class Interval {
 public:
  Interval(double lo, double hi);

  static Interval point(double x) { return Interval(x, x); }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  double midpoint() const noexcept { return 0.5 * (lo_ + hi_); }
  bool degenerate() const noexcept { return lo_ == hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// Hausdorff distance; for intervals max(|A.lo - B.lo|, |A.hi - B.hi|).
double hausdorff(const Interval& a, const Interval& b) noexcept;

/// sup |x| over A, i.e. the Hausdorff distance from A to {0}.
double hausdorff_to_zero(const Interval& a) noexcept;

bool contains(const Interval& a, double x) noexcept;

/// Endpoint-wise lambda*A + (1 - lambda)*B. Throws for lambda outside [0, 1].
Interval convex_combo(const Interval& a, const Interval& b, double lambda);

std::string to_string(const Interval& a);

}  // namespace setfrac
