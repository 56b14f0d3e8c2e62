#include "setfrac/inclusion.hpp"

#include <algorithm>
#include <cmath>

#include "setfrac/format.hpp"
#include "setfrac/frac_integral.hpp"

namespace setfrac {

void CaputoProblem::validate() const {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw InvalidArgument("Caputo order must satisfy 1 < alpha < 2, got alpha=" +
                          format_real(alpha));
  }
  if (!std::isfinite(t0) || !std::isfinite(T) || !(t0 < T)) {
    throw InvalidArgument("time window requires t0 < T");
  }
  if (!std::isfinite(u0) || !std::isfinite(u1)) {
    throw InvalidArgument("initial data must be finite");
  }
  if (!(rhs_lipschitz_u >= 0.0) || !std::isfinite(rhs_lipschitz_u)) {
    throw InvalidArgument("declared Lipschitz constant must be finite and nonnegative");
  }
  if (!rhs) throw InvalidArgument("problem has no right-hand side");
}

double CaputoProblem::contraction_factor() const {
  return rhs_lipschitz_u * std::pow(T - t0, alpha) / gamma_fn(alpha + 1.0);
}

Policy parse_policy(std::string_view name) {
  if (name == "lower") return Policy::Lower;
  if (name == "upper") return Policy::Upper;
  if (name == "midpoint") return Policy::Midpoint;
  throw InvalidArgument("unknown selection policy '" + std::string(name) + "'");
}

std::string_view to_string(Policy p) noexcept {
  switch (p) {
    case Policy::Lower: return "lower";
    case Policy::Upper: return "upper";
    case Policy::Midpoint: return "midpoint";
  }
  return "unknown";
}

NonConvergence::NonConvergence(std::vector<double> history, int iterations)
    : std::runtime_error("Picard iteration did not converge after " +
                         std::to_string(iterations) + " iterations, last residual " +
                         format_real(history.empty() ? 0.0 : history.back())),
      history_(std::move(history)),
      iterations_(iterations) {}

namespace {

double pick(const Interval& v, Policy policy) {
  switch (policy) {
    case Policy::Lower: return v.lo();
    case Policy::Upper: return v.hi();
    case Policy::Midpoint: return v.degenerate() ? v.lo() : v.midpoint();
  }
  return v.lo();
}

}  // namespace

Trajectory solve_with_policy(const CaputoProblem& p, Policy policy, int segments,
                             int max_iter, double tol) {
  p.validate();
  if (max_iter < 1) throw InvalidArgument("max_iter must be positive");
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive, got " + format_real(tol));

  const UniformGrid grid(p.t0, p.T, segments);
  const RlOperator op(grid, p.alpha);
  const std::size_t size = grid.size();

  std::vector<double> base(size);
  for (int n = 0; n <= segments; ++n) base[n] = p.u0 + p.u1 * (grid.node(n) - p.t0);

  Trajectory traj{grid, base, 0, 0.0, {}, p.contraction_factor() >= 1.0};
  std::vector<double> v(size);
  std::vector<double> next(size);
  for (int it = 1; it <= max_iter; ++it) {
    for (int n = 0; n <= segments; ++n) v[n] = pick(p.rhs(grid.node(n), traj.values[n]), policy);
    double residual = 0.0;
    next[0] = base[0];
    for (int n = 1; n <= segments; ++n) {
      next[n] = base[n] + op.apply(v, n);
      residual = std::max(residual, std::abs(next[n] - traj.values[n]));
    }
    if (!std::isfinite(residual)) {
      traj.residual_history.push_back(residual);
      throw NonConvergence(std::move(traj.residual_history), it);
    }
    traj.values.swap(next);
    traj.residual = residual;
    traj.residual_history.push_back(residual);
    traj.iterations_used = it;
    if (residual <= tol) return traj;
  }
  throw NonConvergence(std::move(traj.residual_history), max_iter);
}

bool rhs_monotone_in_u(const CaputoProblem& p, double u_min, double u_max, int samples) {
  if (samples < 2) samples = 2;
  if (!(u_min < u_max)) {
    u_min -= 1.0;
    u_max += 1.0;
  }
  constexpr double slack = 1e-12;
  for (int i = 0; i < samples; ++i) {
    const double t = p.t0 + (p.T - p.t0) * i / (samples - 1);
    Interval prev = p.rhs(t, u_min);
    for (int j = 1; j < samples; ++j) {
      const double u = u_min + (u_max - u_min) * j / (samples - 1);
      const Interval cur = p.rhs(t, u);
      if (cur.lo() < prev.lo() - slack || cur.hi() < prev.hi() - slack) return false;
      prev = cur;
    }
  }
  return true;
}

Funnel solution_funnel(const CaputoProblem& p, int segments, int max_iter, double tol) {
  Trajectory lower = solve_with_policy(p, Policy::Lower, segments, max_iter, tol);
  Trajectory upper = solve_with_policy(p, Policy::Upper, segments, max_iter, tol);
  std::vector<Interval> env;
  env.reserve(lower.values.size());
  double u_min = lower.values.front();
  double u_max = u_min;
  for (std::size_t i = 0; i < lower.values.size(); ++i) {
    const double a = lower.values[i];
    const double b = upper.values[i];
    env.emplace_back(std::min(a, b), std::max(a, b));
    u_min = std::min({u_min, a, b});
    u_max = std::max({u_max, a, b});
  }
  const double pad = 0.1 * (u_max - u_min) + 1e-3;
  const bool monotone = rhs_monotone_in_u(p, u_min - pad, u_max + pad);
  GridMap envelope(lower.grid, std::move(env));
  return Funnel{std::move(envelope), std::move(lower), std::move(upper), !monotone};
}

namespace {

double param(const Params& p, std::string_view key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

}  // namespace

BuiltinField builtin_field(std::string_view kind, const Params& params) {
  if (kind == "constant") {
    const double c = param(params, "c", 1.0);
    const double lo = param(params, "lo", c);
    const double hi = param(params, "hi", c);
    const Interval value(lo, hi);
    return {[value](double, double) { return value; }, 0.0};
  }
  if (kind == "symmetric") {
    const double k = param(params, "k", 1.0);
    const Interval value(-k, k);
    return {[value](double, double) { return value; }, 0.0};
  }
  if (kind == "time_linear") {
    const double slope = param(params, "slope", 1.0);
    return {[slope](double t, double) { return Interval::point(slope * t); }, 0.0};
  }
  if (kind == "linear_u") {
    const double lo = param(params, "lo", 0.0);
    const double hi = param(params, "hi", 1.0);
    const double l = param(params, "L", 0.5);
    (void)Interval(lo, hi);  // validates lo <= hi
    return {[=](double, double u) { return Interval(lo + l * u, hi + l * u); }, std::abs(l)};
  }
  if (kind == "damped") {
    const double l = param(params, "L", 0.5);
    const double w = param(params, "w", 0.25);
    if (!(w >= 0.0)) throw InvalidArgument("damped field needs w >= 0");
    return {[=](double, double u) { return Interval(-l * u - w, -l * u + w); }, std::abs(l)};
  }
  throw InvalidArgument("unknown right-hand side kind '" + std::string(kind) + "'");
}

std::vector<std::string> builtin_field_names() {
  return {"constant", "symmetric", "time_linear", "linear_u", "damped"};
}

}  // namespace setfrac
