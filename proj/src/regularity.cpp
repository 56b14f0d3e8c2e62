#include "setfrac/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "setfrac/format.hpp"
#include "setfrac/frac_integral.hpp"

namespace setfrac {

double total_variation(const GridMap& f) noexcept {
  double v = 0.0;
  for (std::size_t i = 1; i < f.values().size(); ++i) v += hausdorff(f[i], f[i - 1]);
  return v;
}

double lipschitz_constant(const GridMap& f) noexcept {
  const double h = f.grid().step();
  double l = 0.0;
  for (std::size_t i = 1; i < f.values().size(); ++i) {
    l = std::max(l, hausdorff(f[i], f[i - 1]) / h);
  }
  return l;
}

namespace {

void check_bound_args(double rho, double m, double a, double b) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw InvalidArgument("bound requires rho > 0, got rho=" + format_real(rho));
  }
  if (!(m >= 0.0) || !std::isfinite(m)) {
    throw InvalidArgument("bound requires a finite M >= 0, got M=" + format_real(m));
  }
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw InvalidArgument("bound requires a < b");
  }
}

}  // namespace

double bound_sup(double rho, double m, double a, double b) {
  check_bound_args(rho, m, a, b);
  return m * std::pow(b - a, rho) / (gamma_fn(rho) * rho);
}

double bound_L0(double rho, double m, double a, double b) {
  check_bound_args(rho, m, a, b);
  if (!(rho > 1.0)) {
    throw InvalidArgument("Lipschitz bound L0 requires rho > 1, got rho=" + format_real(rho));
  }
  return m * std::pow(b - a, rho - 1.0) / gamma_fn(rho);
}

double continuity_modulus(const GridMap& f, double rho, double u, double v) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw InvalidArgument("continuity modulus requires rho > 0, got rho=" + format_real(rho));
  }
  if (!(f.a() <= u && u <= v && v <= f.b())) {
    throw InvalidArgument("continuity modulus requires a <= u <= v <= b, got u=" +
                          format_real(u) + ", v=" + format_real(v));
  }
  if (u == v) return 0.0;

  const UniformGrid& g = f.grid();
  const int last = g.segment_of(v);
  double first_term = 0.0;
  double second_term = 0.0;

  for (int k = 0; k <= last; ++k) {
    const double t0 = g.node(k);
    const double t1 = std::min(g.node(k + 1), v);
    if (!(t0 < t1)) continue;
    const double lo0 = f[k].lo();
    const double hi0 = f[k].hi();
    const double dlo = (f[k + 1].lo() - lo0) / (g.node(k + 1) - t0);
    const double dhi = (f[k + 1].hi() - hi0) / (g.node(k + 1) - t0);
    auto lo_at = [&](double t) { return lo0 + dlo * (t - t0); };
    auto hi_at = [&](double t) { return hi0 + dhi * (t - t0); };
    auto h_at = [&](double t) { return std::max(std::abs(lo_at(t)), std::abs(hi_at(t))); };

    // Kinks of h: zeros of lo, hi and lo + hi.
    std::vector<double> cuts{t0, t1};
    auto add_root = [&](double c0, double c1) {
      if (c1 == 0.0) return;
      const double r = t0 - c0 / c1;
      if (r > t0 && r < t1) cuts.push_back(r);
    };
    add_root(lo0, dlo);
    add_root(hi0, dhi);
    add_root(lo0 + hi0, dlo + dhi);
    if (u > t0 && u < t1) cuts.push_back(u);
    std::sort(cuts.begin(), cuts.end());

    for (std::size_t i = 1; i < cuts.size(); ++i) {
      const double p = cuts[i - 1];
      const double q = cuts[i];
      if (!(p < q)) continue;
      const double hp = h_at(p);
      const double hq = h_at(q);
      if (q <= u) {
        if (rho != 1.0) {
          first_term += std::abs(linear_kernel_integral(v, p, q, hp, hq, rho) -
                                 linear_kernel_integral(u, p, q, hp, hq, rho));
        }
      } else {
        second_term += linear_kernel_integral(v, p, q, hp, hq, rho);
      }
    }
  }
  return (first_term + second_term) / gamma_fn(rho);
}

RegularityReport regularity_report(const GridMap& f, double rho, double tol) {
  const GridMap g = rl_setvalued(f, rho);
  const double m = sup_bound(f);
  RegularityReport r;
  r.rho = rho;
  r.sup_hd_to_zero = sup_bound(g);
  r.total_variation = total_variation(g);
  r.lipschitz = lipschitz_constant(g);
  r.bound_sup = bound_sup(rho, m, f.a(), f.b());
  r.sup_ok = r.sup_hd_to_zero <= r.bound_sup + tol;
  if (rho > 1.0) {
    r.bound_L0 = bound_L0(rho, m, f.a(), f.b());
    const double va = variation_selection(extremal_lower(g));
    const double vb = variation_selection(extremal_upper(g));
    r.variation_bound = va + vb;
    r.variation_ok = std::isfinite(r.total_variation) && r.total_variation <= va + vb + tol &&
                     std::max(va, vb) <= r.total_variation + tol;
    r.lipschitz_ok = r.lipschitz <= *r.bound_L0 + tol;
  }
  return r;
}

}  // namespace setfrac
