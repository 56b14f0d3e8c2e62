#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "setfrac/fixtures.hpp"
#include "setfrac/inclusion.hpp"
#include "setfrac/regularity.hpp"
#include "setfrac/selections.hpp"
#include "setfrac/verify.hpp"

namespace setfrac {

/// Malformed input document (bad JSON, missing or mistyped fields).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value rounded to 12 significant digits, the precision of every emitted file.
double round12(double x);

// Map spec:
//   {"a": 0, "b": 1, "segments": 256, "kind": "samples" | <builtin>,
//    "lo": [...], "hi": [...], "params": {...}}
// "segments" falls back to `default_segments`; for "samples" it is inferred
// from the array length when absent.
GridMap parse_map_spec(const nlohmann::json& spec, int default_segments);
GridMap load_map_spec(const std::filesystem::path& path, int default_segments);

/// A fixture file holds one map spec or an array of them; each may carry
/// a "name".
std::vector<NamedMap> load_fixture_file(const std::filesystem::path& path, int default_segments);

// Problem spec:
//   {"alpha": 1.5, "t0": 0, "T": 1, "u0": 0, "u1": 0,
//    "rhs": {"kind": <builtin>, "params": {...}}, "lipschitz_u": 0}
// "lipschitz_u" defaults to the builtin field's own constant.
CaputoProblem parse_problem(const nlohmann::json& spec);
CaputoProblem load_problem(const std::filesystem::path& path);

nlohmann::json to_json(const Interval& v);
nlohmann::json to_json(const CheckEntry& e);
nlohmann::json to_json(const SelectionCertificate& c);
nlohmann::json to_json(const RegularityReport& r, const std::string& fixture);

// CSV writers; '.' decimal separator, ',' field separator, 12 significant digits.
void write_map_csv(std::ostream& os, const GridMap& f);                  // u,lo,hi
void write_trajectory_csv(std::ostream& os, const Trajectory& t);        // t,u
void write_funnel_csv(std::ostream& os, const GridMap& envelope);        // t,lo,hi
void write_selections_csv(std::ostream& os, const GridMap& g);           // u,lower,upper,midpoint

}  // namespace setfrac
