#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "setfrac/frac_integral.hpp"
#include "setfrac/grid_map.hpp"

namespace setfrac {

using Params = std::map<std::string, double, std::less<>>;

/// Builtin interval-valued families, sampled onto a uniform grid.
///
///   constant      [lo, hi]                       lo=1, hi=2
///   sym_linear    [-u, u]                        (needs a >= 0)
///   affine        [lo0 + lo1 u, hi0 + hi1 u]     lo0=-3, lo1=1, hi0=0, hi1=1
///   abs_envelope  [-|u - c| - w, |u - c| + w]    c=(a+b)/2, w=0
///   sin_envelope  m(u) -/+ r(u), m = amp sin(2 pi freq u),
///                 r = base + swing cos(2 pi freq u)
///                                                amp=1, freq=1, base=1, swing=0.5
///   hat           [0, height * hat(u)], hat rising 0 -> 1 -> 0 over [a, b]
///                                                height=1
///
/// Throws InvalidArgument for an unknown name or when a sampled node gives
/// lo > hi.
GridMap builtin_map(std::string_view kind, double a, double b, int segments,
                    const Params& params = {});

std::vector<std::string> builtin_map_names();

/// Two-branch map {p} U {q} with constant branches; the nonconvex demo input.
TwoBranchMap two_branch_constant(double a, double b, int segments, double p, double q);

struct NamedMap {
  std::string name;
  GridMap map;
};

/// The fixture catalog driven by the verification suite.
std::vector<NamedMap> default_fixtures(int segments);

}  // namespace setfrac
