#include "setfrac/frac_integral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "setfrac/format.hpp"

namespace setfrac {

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InvalidArgument("gamma_fn requires a finite x > 0, got " + format_real(x));
  }
  return std::tgamma(x);
}

namespace {

void require_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw InvalidArgument("fractional order must satisfy rho > 0, got rho=" + format_real(rho));
  }
}

// sum_{m >= 2} C(p, m) z^m, optionally over even m only. |z| <= 1/2.
double binomial_tail(double p, double z, bool even_only) {
  double c = 1.0;
  double zm = 1.0;
  double sum = 0.0;
  for (int m = 1; m < 512; ++m) {
    c *= (p - (m - 1)) / m;
    zm *= z;
    if (c == 0.0) break;  // integer p
    if (m < 2 || (even_only && m % 2 != 0)) continue;
    const double term = c * zm;
    sum += term;
    if (m > p + 2 && std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// (k-1)^p - (k-1-rho) k^rho, p = rho + 1.
double first_coefficient(int k, double rho) {
  if (k == 1) return rho;
  const double p = rho + 1.0;
  const double kd = k;
  return std::pow(kd, p) * binomial_tail(p, -1.0 / kd, false);
}

// (k+1)^p - 2 k^p + (k-1)^p, p = rho + 1. Summed as a series in 1/k so the
// O(k^p) terms never cancel against each other.
double inner_coefficient(int k, double rho) {
  const double p = rho + 1.0;
  if (k == 1) return 2.0 * std::expm1(rho * std::numbers::ln2);
  const double kd = k;
  return 2.0 * std::pow(kd, p) * binomial_tail(p, 1.0 / kd, true);
}

struct GaussRule {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_16.
const GaussRule& gauss16() {
  static const GaussRule rule = [] {
    GaussRule r;
    constexpr int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      const double w = 2.0 / ((1.0 - z * z) * dp * dp);
      r.x[i] = -z;
      r.x[n - 1 - i] = z;
      r.w[i] = w;
      r.w[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

}  // namespace

RlOperator::RlOperator(UniformGrid grid, double rho)
    : grid_(grid), rho_(rho), scale_(0.0) {
  require_rho(rho);
  const int n = grid_.segments();
  scale_ = std::pow(grid_.step(), rho) / gamma_fn(rho + 2.0);
  first_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  inner_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    first_[k] = first_coefficient(k, rho);
    inner_[k] = inner_coefficient(k, rho);
  }
}

QuadratureWeights RlOperator::weights(int n) const {
  if (n < 0 || n > grid_.segments()) {
    throw InvalidArgument("node index " + std::to_string(n) + " outside [0, " +
                          std::to_string(grid_.segments()) + "]");
  }
  QuadratureWeights q{rho_, n, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
  if (n == 0) return q;
  q.weights[0] = scale_ * first_[n];
  for (int j = 1; j < n; ++j) q.weights[j] = scale_ * inner_[n - j];
  q.weights[n] = scale_;
  return q;
}

double RlOperator::apply(std::span<const double> y, int n) const {
  if (y.size() != grid_.size()) {
    throw InvalidArgument("integrand has " + std::to_string(y.size()) +
                          " node values, grid has " + std::to_string(grid_.size()));
  }
  if (n < 0 || n > grid_.segments()) {
    throw InvalidArgument("node index " + std::to_string(n) + " outside [0, " +
                          std::to_string(grid_.segments()) + "]");
  }
  if (n == 0) return 0.0;
  double sum = y[n];
  for (int k = 1; k < n; ++k) sum += inner_[k] * y[n - k];
  sum += first_[n] * y[0];
  return scale_ * sum;
}

std::vector<double> RlOperator::apply_all(std::span<const double> y) const {
  std::vector<double> out(y.size(), 0.0);
  for (int n = 1; n <= grid_.segments(); ++n) out[n] = apply(y, n);
  return out;
}

double linear_kernel_integral(double x, double t1, double t2, double h1, double h2,
                              double rho) {
  require_rho(rho);
  if (!(t1 <= t2) || !(t2 <= x)) {
    throw InvalidArgument("linear_kernel_integral requires t1 <= t2 <= x");
  }
  const double width = t2 - t1;
  if (width == 0.0) return 0.0;
  const double s1 = x - t1;
  const double s2 = x - t2;
  if (s2 >= 4.0 * width) {
    // Kernel is smooth here; 16-point Gauss-Legendre is exact to roundoff.
    const auto& g = gauss16();
    const double mid = 0.5 * (t1 + t2);
    const double half = 0.5 * width;
    double sum = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const double t = mid + half * g.x[i];
      const double h = h1 + (h2 - h1) * (0.5 * (g.x[i] + 1.0));
      sum += g.w[i] * std::pow(x - t, rho - 1.0) * h;
    }
    return half * sum;
  }
  // Near the singularity: closed-form moments in s = x - t.
  const double m0 = (std::pow(s1, rho) - std::pow(s2, rho)) / rho;
  const double m1 = (std::pow(s1, rho + 1.0) - std::pow(s2, rho + 1.0)) / (rho + 1.0);
  return (h2 * (s1 * m0 - m1) + h1 * (m1 - s2 * m0)) / width;
}

double rl_scalar(const Selection& f, double rho, int n) {
  return RlOperator(f.grid(), rho).apply(f.values(), n);
}

GridMap rl_setvalued(const GridMap& f, double rho) {
  return rl_setvalued(f, RlOperator(f.grid(), rho));
}

GridMap rl_setvalued(const GridMap& f, const RlOperator& op) {
  if (!(op.grid() == f.grid())) throw InvalidArgument("operator grid differs from map grid");
  const auto lo = op.apply_all(f.lower());
  const auto hi = op.apply_all(f.upper());
  std::vector<Interval> values;
  values.reserve(lo.size());
  // Nonnegative weights keep lo <= hi; max() only absorbs roundoff.
  for (std::size_t i = 0; i < lo.size(); ++i) values.emplace_back(lo[i], std::max(lo[i], hi[i]));
  return GridMap(f.grid(), std::move(values));
}

std::vector<double> rl_selection_oracle(const GridMap& f, double rho, int n, int samples,
                                        std::uint64_t seed) {
  if (samples < 1) {
    throw InvalidArgument("oracle needs samples >= 1, got " + std::to_string(samples));
  }
  const RlOperator op(f.grid(), rho);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(samples) + 2);
  out.push_back(op.apply(f.lower(), n));
  out.push_back(op.apply(f.upper(), n));
  for (int k = 0; k < samples; ++k) {
    out.push_back(op.apply(random_selection(f, seed + static_cast<std::uint64_t>(k)).values(), n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ChatteringResult chattering_demo(const TwoBranchMap& f, double rho, int n, int depth,
                                 int levels) {
  require_rho(rho);
  if (f.branches.size() != f.grid.size()) {
    throw InvalidArgument("two-branch map needs one branch pair per node");
  }
  if (n < 1 || n > f.grid.segments()) {
    throw InvalidArgument("chattering demo needs a target node in [1, segments]");
  }
  if (depth < 0 || depth > 24 || levels < 1) {
    throw InvalidArgument("chattering demo needs 0 <= depth <= 24 and levels >= 1");
  }
  std::vector<double> p;
  std::vector<double> q;
  for (const auto& [bp, bq] : f.branches) {
    p.push_back(bp);
    q.push_back(bq);
  }
  const Selection sp(f.grid, p);
  const Selection sq(f.grid, q);

  const double a = f.grid.a();
  const double x = f.grid.node(n);
  const long cells = 1L << depth;
  const double w = (x - a) / static_cast<double>(cells);
  const double inv_gamma = 1.0 / gamma_fn(rho);

  ChatteringResult r{{}, {}, Interval(0.0, 0.0), Interval(0.0, 0.0), 0.0};
  const RlOperator op(f.grid, rho);
  const double jp = op.apply(p, n);
  const double jq = op.apply(q, n);
  r.convexified = Interval(std::min(jp, jq), std::max(jp, jq));

  for (int level = 0; level <= levels; ++level) {
    const double duty = static_cast<double>(level) / levels;
    double value = 0.0;
    for (long c = 0; c < cells; ++c) {
      const double t0 = a + static_cast<double>(c) * w;
      const double t1 = (c + 1 == cells) ? x : a + static_cast<double>(c + 1) * w;
      const double split = std::min(t1, t0 + duty * (t1 - t0));
      const double mid = 0.5 * (t0 + t1);
      const double pv = sp.eval(mid);
      const double qv = sq.eval(mid);
      value += pv * linear_kernel_integral(x, t0, split, 1.0, 1.0, rho);
      value += qv * linear_kernel_integral(x, split, t1, 1.0, 1.0, rho);
    }
    value *= inv_gamma;
    r.duty.push_back(duty);
    r.values.push_back(value);
    const double target = duty * jp + (1.0 - duty) * jq;
    const double width = r.convexified.width();
    const double dev = std::abs(value - target);
    r.max_deviation = std::max(r.max_deviation, width > 0.0 ? dev / width : dev);
  }
  const auto [mn, mx] = std::minmax_element(r.values.begin(), r.values.end());
  r.hull = Interval(*mn, *mx);
  return r;
}

}  // namespace setfrac
