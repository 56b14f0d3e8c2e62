#pragma once

// Reference computations used only by tests. Nothing here calls into the
// product-integration code it is used to check.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace setfrac::oracle {

/// Gamma at integers and half-integers from factorials and sqrt(pi).
inline double gamma_closed_form(int twice_x) {
  if (twice_x % 2 == 0) {
    double f = 1.0;
    for (int k = 2; k < twice_x / 2; ++k) f *= k;
    return f;
  }
  // Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
  const int n = (twice_x - 1) / 2;
  double g = std::sqrt(std::numbers::pi);
  for (int k = 1; k <= n; ++k) g *= (k - 0.5);
  return g;
}

/// int_{t1}^{t2} (x - t)^(rho - 1) f(t) dt by tanh-sinh; f smooth on [t1, t2].
/// Integrates in s = x - t so the singular endpoint sits at s = 0, where
/// tanh-sinh abscissae are exact.
inline double kernel_integral(const std::function<double(double)>& f, double x, double t1,
                              double t2, double rho) {
  static boost::math::quadrature::tanh_sinh<double> integrator(15);
  auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    return std::pow(s, rho - 1.0) * f(x - s);
  };
  return integrator.integrate(integrand, x - t2, x - t1, 1e-14);
}

/// (1/Gamma(rho)) int_a^x (x - t)^(rho - 1) f(t) dt, integrated piece by piece
/// over the given breakpoints (which must include a and x) so each piece is smooth.
inline double rl_reference(const std::function<double(double)>& f, double rho,
                           const std::vector<double>& breaks) {
  const double x = breaks.back();
  double sum = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (breaks[i] > breaks[i - 1]) sum += kernel_integral(f, x, breaks[i - 1], breaks[i], rho);
  }
  return sum / std::tgamma(rho);
}

/// Breakpoints a, a + h, ..., x_n of a uniform grid.
inline std::vector<double> grid_breaks(double a, double b, int segments, int n) {
  std::vector<double> out;
  for (int i = 0; i <= n; ++i) out.push_back(i == segments ? b : a + (b - a) * i / segments);
  return out;
}

/// Power rule: J^rho t^beta at x (a = 0) = Gamma(beta + 1) / Gamma(beta + rho + 1) x^(beta + rho).
inline double power_rule(double beta, double rho, double x) {
  return std::exp(std::lgamma(beta + 1.0) - std::lgamma(beta + rho + 1.0)) *
         std::pow(x, beta + rho);
}

}  // namespace setfrac::oracle
