#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "setfrac/grid_map.hpp"

namespace setfrac {

/// Euler gamma function for x > 0.
double gamma_fn(double x);

/// Product-integration weights for node n: sum_j weights[j] * f(u_j) equals
/// (1/Gamma(rho)) * int_a^{u_n} (u_n - t)^(rho - 1) f(t) dt for every f that is
/// piecewise linear on the grid.
struct QuadratureWeights {
  double rho;
  int target_index;
  std::vector<double> weights;
};

/// Riemann-Liouville integral operator of order rho on a fixed uniform grid.
///
/// The weights of every node are built from two tables indexed by the
/// distance k = n - j, so one instance serves all target nodes. For a
/// piecewise-linear integrand the result is exact up to roundoff; the
/// kernel's singularity at t = u_n is integrated in closed form.
class RlOperator {
 public:
  RlOperator(UniformGrid grid, double rho);

  const UniformGrid& grid() const noexcept { return grid_; }
  double rho() const noexcept { return rho_; }

  QuadratureWeights weights(int n) const;

  /// Integral at node n of the piecewise-linear function with node values y.
  double apply(std::span<const double> y, int n) const;
  /// Integral at every node; entry 0 is always 0.
  std::vector<double> apply_all(std::span<const double> y) const;

 private:
  UniformGrid grid_;
  double rho_;
  double scale_;                // h^rho / Gamma(rho + 2)
  std::vector<double> first_;   // first_[k]: coefficient of y_0 when n = k
  std::vector<double> inner_;   // inner_[k]: coefficient of y_{n-k}, 1 <= k < n
};

/// int_{t1}^{t2} (x - t)^(rho - 1) h(t) dt for h linear from h1 at t1 to h2 at
/// t2, with t1 <= t2 <= x. No 1/Gamma(rho) factor.
double linear_kernel_integral(double x, double t1, double t2, double h1, double h2,
                              double rho);

double rl_scalar(const Selection& f, double rho, int n);

/// Node values [J lo, J hi]; linearly interpolated between nodes.
GridMap rl_setvalued(const GridMap& f, double rho);
GridMap rl_setvalued(const GridMap& f, const RlOperator& op);

/// Integrals at node n of `samples` seeded random selections plus both
/// extremal selections; sorted, duplicates removed.
std::vector<double> rl_selection_oracle(const GridMap& f, double rho, int n, int samples,
                                        std::uint64_t seed);

// Nonconvex demonstration. A two-branch map F(t) = {p(t)} U {q(t)} is not an
// Interval-valued map; it is kept here only to show that integrals of
// chattering selections fill the convex hull of the branch integrals.
struct TwoBranchMap {
  UniformGrid grid;
  std::vector<std::pair<double, double>> branches;  // node values of p and q
};

struct ChatteringResult {
  std::vector<double> duty;     // fraction of each cell spent on branch p
  std::vector<double> values;   // integral at the target node per duty level
  Interval hull;                // [min, max] of values
  Interval convexified;         // [min, max] of the two branch integrals
  double max_deviation;         // max |value - linear target| / width of convexified
};

/// Splits [a, u_n] into 2^depth cells; in each cell the selection follows
/// branch p on the first `duty` fraction and branch q on the rest, with
/// branch values frozen at the cell midpoint. Duty levels are
/// 0, 1/levels, ..., 1.
ChatteringResult chattering_demo(const TwoBranchMap& f, double rho, int n, int depth,
                                 int levels);

}  // namespace setfrac
