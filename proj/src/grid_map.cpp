#include "setfrac/grid_map.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "setfrac/format.hpp"

namespace setfrac {

UniformGrid::UniformGrid(double a, double b, int segments)
    : a_(a), b_(b), segments_(segments) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw InvalidArgument("grid requires finite a < b, got a=" + format_real(a) +
                          ", b=" + format_real(b));
  }
  if (segments < 1) {
    throw InvalidArgument("grid requires at least one segment, got " +
                          std::to_string(segments));
  }
}

double UniformGrid::node(int i) const noexcept {
  if (i == segments_) return b_;
  return a_ + (b_ - a_) * (static_cast<double>(i) / segments_);
}

int UniformGrid::segment_of(double u) const {
  if (!(u >= a_ && u <= b_)) {
    throw InvalidArgument("point " + format_real(u) + " outside [" +
                          format_real(a_) + ", " + format_real(b_) + "]");
  }
  const int k = static_cast<int>(std::floor((u - a_) / step()));
  return std::clamp(k, 0, segments_ - 1);
}

namespace {

double lerp_at(const UniformGrid& g, int k, double y0, double y1, double u) {
  const double u0 = g.node(k);
  const double u1 = g.node(k + 1);
  if (u == u0) return y0;
  if (u == u1) return y1;
  const double s = (u - u0) / (u1 - u0);
  return y0 + s * (y1 - y0);
}

double interpolate(const UniformGrid& g, std::span<const double> y, double u) {
  const int k = g.segment_of(u);
  return lerp_at(g, k, y[k], y[k + 1], u);
}

}  // namespace

Selection::Selection(UniformGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("selection needs " + std::to_string(grid_.size()) +
                          " node values, got " + std::to_string(values_.size()));
  }
  for (double y : values_) {
    if (!std::isfinite(y)) throw InvalidArgument("selection values must be finite");
  }
}

double Selection::eval(double u) const { return interpolate(grid_, values_, u); }

GridMap::GridMap(UniformGrid grid, std::vector<Interval> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("grid map needs " + std::to_string(grid_.size()) +
                          " node intervals, got " + std::to_string(values_.size()));
  }
}

GridMap GridMap::sample(double a, double b, int segments,
                        const std::function<Interval(double)>& f) {
  UniformGrid grid(a, b, segments);
  std::vector<Interval> values;
  values.reserve(grid.size());
  for (int i = 0; i <= segments; ++i) values.push_back(f(grid.node(i)));
  return GridMap(grid, std::move(values));
}

std::vector<double> GridMap::lower() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.lo());
  return out;
}

std::vector<double> GridMap::upper() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.hi());
  return out;
}

Interval eval(const GridMap& f, double u) {
  const int k = f.grid().segment_of(u);
  const Interval& v0 = f[k];
  const Interval& v1 = f[k + 1];
  const double l = lerp_at(f.grid(), k, v0.lo(), v1.lo(), u);
  const double h = lerp_at(f.grid(), k, v0.hi(), v1.hi(), u);
  return Interval(l, std::max(l, h));
}

double sup_bound(const GridMap& f) noexcept {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, hausdorff_to_zero(v));
  return m;
}

Selection extremal_lower(const GridMap& f) { return Selection(f.grid(), f.lower()); }

Selection extremal_upper(const GridMap& f) { return Selection(f.grid(), f.upper()); }

Selection random_selection(const GridMap& f, std::uint64_t seed) {
  // mt19937_64 output is fixed by the standard; the mapping to [0, 1] is
  // done by hand so results do not depend on the library's distributions.
  std::mt19937_64 rng(seed);
  std::vector<double> y;
  y.reserve(f.values().size());
  for (const auto& v : f.values()) {
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    y.push_back(v.degenerate() ? v.lo() : std::clamp(v.lo() + r * v.width(), v.lo(), v.hi()));
  }
  return Selection(f.grid(), std::move(y));
}

bool is_selection_of(const Selection& s, const GridMap& f) noexcept {
  if (!(s.grid() == f.grid())) return false;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (!contains(f[i], s[i])) return false;
  }
  return true;
}

double variation_selection(const Selection& s) noexcept {
  const auto y = s.values();
  double v = 0.0;
  for (std::size_t i = 1; i < y.size(); ++i) v += std::abs(y[i] - y[i - 1]);
  return v;
}

double lipschitz_selection(const Selection& s) noexcept {
  const auto y = s.values();
  const double h = s.grid().step();
  double l = 0.0;
  for (std::size_t i = 1; i < y.size(); ++i) l = std::max(l, std::abs(y[i] - y[i - 1]) / h);
  return l;
}

GridMap scaled(const GridMap& f, double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw InvalidArgument("scale factor must be finite and nonnegative");
  }
  std::vector<Interval> out;
  out.reserve(f.values().size());
  for (const auto& v : f.values()) out.emplace_back(c * v.lo(), c * v.hi());
  return GridMap(f.grid(), std::move(out));
}

Selection combine(const Selection& s, const Selection& t, double lambda) {
  if (!(s.grid() == t.grid())) throw InvalidArgument("selections live on different grids");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InvalidArgument("combination weight must lie in [0, 1], got " + format_real(lambda));
  }
  std::vector<double> y(s.values().size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double lo = std::min(s[i], t[i]);
    const double hi = std::max(s[i], t[i]);
    y[i] = std::clamp(lambda * s[i] + (1.0 - lambda) * t[i], lo, hi);
  }
  return Selection(s.grid(), std::move(y));
}

}  // namespace setfrac
