#include "setfrac/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace setfrac {

namespace {

double param(const Params& p, std::string_view key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

}  // namespace

GridMap builtin_map(std::string_view kind, double a, double b, int segments,
                    const Params& params) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (kind == "constant") {
    const double lo = param(params, "lo", 1.0);
    const double hi = param(params, "hi", 2.0);
    return GridMap::sample(a, b, segments, [&](double) { return Interval(lo, hi); });
  }
  if (kind == "sym_linear") {
    if (a < 0.0) throw InvalidArgument("sym_linear [-u, u] needs a >= 0");
    return GridMap::sample(a, b, segments, [](double u) { return Interval(-u, u); });
  }
  if (kind == "affine") {
    const double lo0 = param(params, "lo0", -3.0);
    const double lo1 = param(params, "lo1", 1.0);
    const double hi0 = param(params, "hi0", 0.0);
    const double hi1 = param(params, "hi1", 1.0);
    return GridMap::sample(a, b, segments,
                           [&](double u) { return Interval(lo0 + lo1 * u, hi0 + hi1 * u); });
  }
  if (kind == "abs_envelope") {
    const double c = param(params, "c", 0.5 * (a + b));
    const double w = param(params, "w", 0.0);
    return GridMap::sample(a, b, segments, [&](double u) {
      const double r = std::abs(u - c) + w;
      return Interval(-r, r);
    });
  }
  if (kind == "sin_envelope") {
    const double amp = param(params, "amp", 1.0);
    const double freq = param(params, "freq", 1.0);
    const double base = param(params, "base", 1.0);
    const double swing = param(params, "swing", 0.5);
    return GridMap::sample(a, b, segments, [&](double u) {
      const double m = amp * std::sin(two_pi * freq * u);
      const double r = base + swing * std::cos(two_pi * freq * u);
      return Interval(m - r, m + r);
    });
  }
  if (kind == "hat") {
    const double height = param(params, "height", 1.0);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    return GridMap::sample(a, b, segments, [&](double u) {
      return Interval(0.0, height * (1.0 - std::abs(u - mid) / half));
    });
  }
  throw InvalidArgument("unknown map kind '" + std::string(kind) + "'");
}

std::vector<std::string> builtin_map_names() {
  return {"constant", "sym_linear", "affine", "abs_envelope", "sin_envelope", "hat"};
}

TwoBranchMap two_branch_constant(double a, double b, int segments, double p, double q) {
  UniformGrid grid(a, b, segments);
  return TwoBranchMap{grid, std::vector<std::pair<double, double>>(grid.size(), {p, q})};
}

std::vector<NamedMap> default_fixtures(int segments) {
  std::vector<NamedMap> out;
  out.push_back({"sym_linear", builtin_map("sym_linear", 0.0, 1.0, segments)});
  out.push_back({"constant", builtin_map("constant", 0.0, 1.0, segments)});
  out.push_back({"constant_sym",
                 builtin_map("constant", 0.0, 1.0, segments, {{"lo", -2.0}, {"hi", 2.0}})});
  out.push_back({"affine", builtin_map("affine", 0.0, 1.0, segments)});
  out.push_back({"abs_envelope", builtin_map("abs_envelope", 0.0, 1.0, segments)});
  out.push_back({"sin_envelope", builtin_map("sin_envelope", 0.0, 2.0, segments)});
  out.push_back({"hat", builtin_map("hat", 0.0, 1.0, segments)});
  out.push_back({"affine_wide",
                 builtin_map("affine", -1.0, 2.0, segments,
                             {{"lo0", -2.0}, {"lo1", 0.5}, {"hi0", 1.0}, {"hi1", 1.0}})});
  return out;
}

}  // namespace setfrac
