#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "setfrac/interval.hpp"

namespace setfrac {

/// Uniform grid a = u_0 < u_1 < ... < u_n = b.
class UniformGrid {
 public:
  UniformGrid(double a, double b, int segments);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int segments() const noexcept { return segments_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(segments_) + 1; }
  double step() const noexcept { return (b_ - a_) / segments_; }
  double node(int i) const noexcept;

  /// Index of the segment containing u (the last segment owns b).
  int segment_of(double u) const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double a_;
  double b_;
  int segments_;
};

/// Single-valued piecewise-linear function stored by node values.
class Selection {
 public:
  Selection(UniformGrid grid, std::vector<double> values);

  const UniformGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double eval(double u) const;

 private:
  UniformGrid grid_;
  std::vector<double> values_;
};

/// Interval-valued map on [a, b] with piecewise-linear lower and upper
/// endpoint functions on a uniform grid.
///
/// Measurability and integrable boundedness hold by construction: node values
/// are finite and the endpoints are linear between nodes.
class GridMap {
 public:
  GridMap(UniformGrid grid, std::vector<Interval> values);

  /// Samples lo(u), hi(u) at the grid nodes.
  static GridMap sample(double a, double b, int segments,
                        const std::function<Interval(double)>& f);

  const UniformGrid& grid() const noexcept { return grid_; }
  double a() const noexcept { return grid_.a(); }
  double b() const noexcept { return grid_.b(); }
  int segments() const noexcept { return grid_.segments(); }
  std::span<const Interval> values() const noexcept { return values_; }
  const Interval& operator[](std::size_t i) const noexcept { return values_[i]; }

  std::vector<double> lower() const;
  std::vector<double> upper() const;

 private:
  UniformGrid grid_;
  std::vector<Interval> values_;
};

/// Linear interpolation of both endpoints; exact at nodes. Throws for u
/// outside [a, b].
Interval eval(const GridMap& f, double u);

/// M = sup_u sup_{x in F(u)} |x|; attained at a node for piecewise-linear
/// endpoints.
double sup_bound(const GridMap& f) noexcept;

Selection extremal_lower(const GridMap& f);
Selection extremal_upper(const GridMap& f);

/// y_i uniform on [lo_i, hi_i], a pure function of (F, seed).
Selection random_selection(const GridMap& f, std::uint64_t seed);

/// True iff f shares F's grid and lo_i <= y_i <= hi_i at every node.
bool is_selection_of(const Selection& s, const GridMap& f) noexcept;

/// Sum of |dy| over segments; exact for piecewise-linear functions.
double variation_selection(const Selection& s) noexcept;
/// Max of |dy|/du over segments; exact for piecewise-linear functions.
double lipschitz_selection(const Selection& s) noexcept;

/// Multiplies every endpoint by c >= 0.
GridMap scaled(const GridMap& f, double c);

/// Pointwise convex combination lambda*s + (1 - lambda)*t on a shared grid.
Selection combine(const Selection& s, const Selection& t, double lambda);

}  // namespace setfrac
