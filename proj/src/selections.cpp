#include "setfrac/selections.hpp"

#include <vector>

#include "setfrac/regularity.hpp"

namespace setfrac {

std::string_view to_string(SelectionKind kind) noexcept {
  switch (kind) {
    case SelectionKind::LowerExtremal: return "lower-extremal";
    case SelectionKind::UpperExtremal: return "upper-extremal";
    case SelectionKind::ConvexCombination: return "convex-combination";
    case SelectionKind::Midpoint: return "midpoint";
  }
  return "unknown";
}

std::string_view to_string(RegularityKind kind) noexcept {
  switch (kind) {
    case RegularityKind::BoundedVariation: return "bounded-variation";
    case RegularityKind::Lipschitz: return "lipschitz";
  }
  return "unknown";
}

std::pair<Selection, Selection> extremal_selections(const GridMap& g) {
  return {extremal_lower(g), extremal_upper(g)};
}

Selection midpoint_selection(const GridMap& g) {
  std::vector<double> y;
  y.reserve(g.values().size());
  for (const auto& v : g.values()) y.push_back(v.degenerate() ? v.lo() : v.midpoint());
  return Selection(g.grid(), std::move(y));
}

SelectionCertificate certify(const GridMap& g, const Selection& s, SelectionKind kind) {
  return SelectionCertificate{kind,
                              s,
                              variation_selection(s),
                              lipschitz_selection(s),
                              total_variation(g),
                              lipschitz_constant(g),
                              is_selection_of(s, g)};
}

SelectionCertificate regular_selection(const GridMap& g, RegularityKind) {
  return certify(g, extremal_lower(g), SelectionKind::LowerExtremal);
}

bool certificate_holds(const SelectionCertificate& c, double slack) noexcept {
  return c.membership_checked && c.variation <= c.parent_variation + slack &&
         c.lipschitz <= c.parent_lipschitz + slack;
}

}  // namespace setfrac
