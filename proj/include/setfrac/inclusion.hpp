#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "setfrac/fixtures.hpp"
#include "setfrac/grid_map.hpp"

namespace setfrac {

using SetValuedField = std::function<Interval(double t, double u)>;

/// Caputo inclusion D^alpha u(t) in F(t, u(t)), u(t0) = u0, u'(t0) = u1, with
/// 1 < alpha < 2, solved through the equivalent integral inclusion
///
///   u(t) in u0 + u1 (t - t0) + (1/Gamma(alpha)) int_{t0}^t (t - s)^(alpha-1) v(s) ds,
///   v(s) in F(s, u(s)).
struct CaputoProblem {
  double alpha = 1.5;
  double t0 = 0.0;
  double T = 1.0;
  double u0 = 0.0;
  double u1 = 0.0;
  SetValuedField rhs;
  double rhs_lipschitz_u = 0.0;  // declared H_d-Lipschitz constant in u

  /// Throws InvalidArgument when alpha, the time window or the field is invalid.
  void validate() const;
  /// L (T - t0)^alpha / Gamma(alpha + 1).
  double contraction_factor() const;
};

enum class Policy { Lower, Upper, Midpoint };

Policy parse_policy(std::string_view name);
std::string_view to_string(Policy p) noexcept;

struct Trajectory {
  UniformGrid grid;
  std::vector<double> values;
  int iterations_used = 0;
  double residual = 0.0;
  std::vector<double> residual_history;
  bool contraction_warning = false;
};

/// Picard iteration did not reach the tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(std::vector<double> history, int iterations);
  const std::vector<double>& residual_history() const noexcept { return history_; }
  double residual() const noexcept { return history_.empty() ? 0.0 : history_.back(); }
  int iterations() const noexcept { return iterations_; }

 private:
  std::vector<double> history_;
  int iterations_;
};

/// Successive approximation on the integral form. Iterate k+1 is
/// u0 + u1 (t_n - t0) + J^alpha v_k (t_n), where v_k picks the policy endpoint
/// of F(t_j, u_k(t_j)) at each node and is linear between nodes. Starts from
/// the linear initial guess and stops once the sup-norm change is <= tol.
Trajectory solve_with_policy(const CaputoProblem& p, Policy policy, int segments,
                             int max_iter, double tol);

struct Funnel {
  GridMap envelope;   // [min, max] of the lower and upper policy trajectories
  Trajectory lower;
  Trajectory upper;
  bool monotonicity_warning;  // an rhs endpoint decreased in u on the probe grid
};

/// Envelope of the lower- and upper-policy trajectories. It encloses every
/// policy-constant solution only when both rhs endpoints are nondecreasing in
/// u; that is probed numerically and flagged otherwise. Not a certified
/// reachable set.
Funnel solution_funnel(const CaputoProblem& p, int segments, int max_iter, double tol);

/// True when both endpoints of p.rhs are nondecreasing in u on a
/// (t, u) sample grid over [t0, T] x [u_min, u_max].
bool rhs_monotone_in_u(const CaputoProblem& p, double u_min, double u_max, int samples = 17);

struct BuiltinField {
  SetValuedField field;
  double lipschitz_u;
};

/// Builtin right-hand sides:
///
///   constant     [lo, hi]                     lo=1, hi=1
///   symmetric    [-k, k]                      k=1
///   time_linear  [slope t, slope t]           slope=1
///   linear_u     [lo + L u, hi + L u]         lo=0, hi=1, L=0.5
///   damped       [-L u - w, -L u + w]         L=0.5, w=0.25
BuiltinField builtin_field(std::string_view kind, const Params& params = {});

std::vector<std::string> builtin_field_names();

}  // namespace setfrac
