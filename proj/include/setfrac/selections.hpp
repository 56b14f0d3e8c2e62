#pragma once

#include <string_view>
#include <utility>

#include "setfrac/grid_map.hpp"

namespace setfrac {

enum class SelectionKind { LowerExtremal, UpperExtremal, ConvexCombination, Midpoint };
enum class RegularityKind { BoundedVariation, Lipschitz };

std::string_view to_string(SelectionKind kind) noexcept;
std::string_view to_string(RegularityKind kind) noexcept;

/// Measured regularity of a selection next to that of its parent map.
struct SelectionCertificate {
  SelectionKind kind;
  Selection selection;
  double variation;
  double lipschitz;
  double parent_variation;
  double parent_lipschitz;
  bool membership_checked;  // membership held at every node
};

/// (g-, g+) with g-(u) = min G(u), g+(u) = max G(u).
std::pair<Selection, Selection> extremal_selections(const GridMap& g);

Selection midpoint_selection(const GridMap& g);

/// Measures `s` against `g`.
SelectionCertificate certify(const GridMap& g, const Selection& s, SelectionKind kind);

/// Constructive regular selection of G. In one dimension the lower-extremal
/// selection already has V(g) <= V(G) and Lip(g) <= Lip(G), since
/// |dlo| <= H_d on every segment; it is returned as the witness for either
/// regularity class.
SelectionCertificate regular_selection(const GridMap& g, RegularityKind kind);

/// membership_checked && variation <= parent_variation + slack &&
/// lipschitz <= parent_lipschitz + slack.
bool certificate_holds(const SelectionCertificate& c, double slack = 1e-12) noexcept;

}  // namespace setfrac
