#pragma once

#include <optional>
#include <string>

#include "setfrac/grid_map.hpp"

namespace setfrac {

/// V(F, [a, b]) with respect to the Hausdorff distance.
///
/// On each segment both endpoint slopes are constant, so the Hausdorff
/// increments are additive there and no refinement of the node partition can
/// increase the sum. The value is exact for the piecewise-linear
/// representation and a lower bound for any smoother map it was sampled from.
double total_variation(const GridMap& f) noexcept;

/// Smallest Lipschitz constant of F with respect to the Hausdorff distance,
/// for the piecewise-linear representation.
double lipschitz_constant(const GridMap& f) noexcept;

/// M (b - a)^rho / (Gamma(rho) rho): bound on sup_u H_d(J^rho F(u), {0}).
double bound_sup(double rho, double m, double a, double b);

/// L0 = M (b - a)^(rho - 1) / Gamma(rho); needs rho > 1.
double bound_L0(double rho, double m, double a, double b);

/// Phi(u, v) for a <= u <= v <= b with h(t) = max(|lo(t)|, |hi(t)|):
///
///   (1/Gamma(rho)) [ int_a^u |(v-t)^(rho-1) - (u-t)^(rho-1)| h(t) dt
///                    + int_u^v (v-t)^(rho-1) h(t) dt ]
///
/// h is split at its kinks so every piece is linear and integrated exactly.
/// The kernel difference keeps one sign on [a, u], so the absolute value is
/// taken piecewise without loss.
double continuity_modulus(const GridMap& f, double rho, double u, double v);

struct RegularityReport {
  double rho = 0.0;
  double sup_hd_to_zero = 0.0;    // max over nodes of H_d(G(u_n), {0})
  double total_variation = 0.0;   // V(G)
  double lipschitz = 0.0;         // Lip(G) from node slopes
  double bound_sup = 0.0;
  std::optional<double> bound_L0;         // only for rho > 1
  std::optional<double> variation_bound;  // V(A) + V(B) of G's endpoints, rho > 1
  bool sup_ok = false;
  std::optional<bool> variation_ok;
  std::optional<bool> lipschitz_ok;
};

/// Integrates F and compares the measured regularity of G = J^rho F against
/// the analytic bounds, with additive tolerance `tol`.
RegularityReport regularity_report(const GridMap& f, double rho, double tol = 1e-9);

}  // namespace setfrac
