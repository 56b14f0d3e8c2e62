#include "setfrac/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "setfrac/format.hpp"

namespace setfrac {

using nlohmann::json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  const std::string text = format_real(x);
  double out = x;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

namespace {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

double number_field(const json& spec, const char* key, double fallback) {
  if (!spec.contains(key)) return fallback;
  const auto& v = spec.at(key);
  if (!v.is_number()) throw InputError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

Params read_params(const json& spec) {
  Params out;
  if (!spec.contains("params")) return out;
  const auto& p = spec.at("params");
  if (!p.is_object()) throw InputError("field 'params' must be an object");
  for (const auto& [key, value] : p.items()) {
    if (!value.is_number()) throw InputError("parameter '" + key + "' must be a number");
    out[key] = value.get<double>();
  }
  return out;
}

std::vector<double> number_array(const json& spec, const char* key) {
  if (!spec.contains(key) || !spec.at(key).is_array()) {
    throw InputError(std::string("field '") + key + "' must be an array of numbers");
  }
  std::vector<double> out;
  for (const auto& v : spec.at(key)) {
    if (!v.is_number()) throw InputError(std::string("field '") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string kind_field(const json& spec) {
  if (!spec.contains("kind") || !spec.at("kind").is_string()) {
    throw InputError("field 'kind' must be a string");
  }
  return spec.at("kind").get<std::string>();
}

}  // namespace

GridMap parse_map_spec(const json& spec, int default_segments) {
  if (!spec.is_object()) throw InputError("map spec must be a JSON object");
  const std::string kind = kind_field(spec);
  const double a = number_field(spec, "a", 0.0);
  const double b = number_field(spec, "b", 1.0);
  int segments = default_segments;
  if (spec.contains("segments")) {
    if (!spec.at("segments").is_number_integer()) throw InputError("field 'segments' must be an integer");
    segments = spec.at("segments").get<int>();
  }
  try {
    if (kind == "samples") {
      const auto lo = number_array(spec, "lo");
      const auto hi = number_array(spec, "hi");
      if (lo.size() != hi.size()) throw InputError("'lo' and 'hi' differ in length");
      if (!spec.contains("segments")) segments = static_cast<int>(lo.size()) - 1;
      UniformGrid grid(a, b, segments);
      if (lo.size() != grid.size()) {
        throw InputError("expected " + std::to_string(grid.size()) + " samples, got " +
                         std::to_string(lo.size()));
      }
      std::vector<Interval> values;
      values.reserve(lo.size());
      for (std::size_t i = 0; i < lo.size(); ++i) values.emplace_back(lo[i], hi[i]);
      return GridMap(grid, std::move(values));
    }
    return builtin_map(kind, a, b, segments, read_params(spec));
  } catch (const InvalidArgument& e) {
    throw InputError(std::string("invalid map spec: ") + e.what());
  }
}

GridMap load_map_spec(const std::filesystem::path& path, int default_segments) {
  return parse_map_spec(read_json_file(path), default_segments);
}

std::vector<NamedMap> load_fixture_file(const std::filesystem::path& path, int default_segments) {
  const json doc = read_json_file(path);
  std::vector<NamedMap> out;
  auto add = [&](const json& spec) {
    std::string name = spec.is_object() && spec.contains("name") && spec.at("name").is_string()
                           ? spec.at("name").get<std::string>()
                           : "";
    GridMap map = parse_map_spec(spec, default_segments);
    if (name.empty()) name = kind_field(spec) + "_" + std::to_string(out.size());
    out.push_back({std::move(name), std::move(map)});
  };
  if (doc.is_array()) {
    for (const auto& spec : doc) add(spec);
  } else {
    add(doc);
  }
  if (out.empty()) throw InputError("fixture file '" + path.string() + "' holds no maps");
  return out;
}

CaputoProblem parse_problem(const json& spec) {
  if (!spec.is_object()) throw InputError("problem spec must be a JSON object");
  if (!spec.contains("rhs") || !spec.at("rhs").is_object()) {
    throw InputError("problem spec needs an 'rhs' object");
  }
  const json& rhs = spec.at("rhs");
  BuiltinField field;
  try {
    field = builtin_field(kind_field(rhs), read_params(rhs));
  } catch (const InvalidArgument& e) {
    throw InputError(std::string("invalid rhs: ") + e.what());
  }
  CaputoProblem p;
  p.alpha = number_field(spec, "alpha", 1.5);
  p.t0 = number_field(spec, "t0", 0.0);
  p.T = number_field(spec, "T", 1.0);
  p.u0 = number_field(spec, "u0", 0.0);
  p.u1 = number_field(spec, "u1", 0.0);
  p.rhs = std::move(field.field);
  p.rhs_lipschitz_u = number_field(spec, "lipschitz_u", field.lipschitz_u);
  return p;
}

CaputoProblem load_problem(const std::filesystem::path& path) {
  return parse_problem(read_json_file(path));
}

json to_json(const Interval& v) { return json{{"lo", round12(v.lo())}, {"hi", round12(v.hi())}}; }

json to_json(const CheckEntry& e) {
  json j;
  j["theorem"] = e.theorem;
  j["check"] = e.check;
  j["fixture"] = e.fixture;
  j["rho"] = round12(e.rho);
  j["measured"] = e.measured ? json(round12(*e.measured)) : json(nullptr);
  j["bound"] = e.bound ? json(round12(*e.bound)) : json(nullptr);
  j["tolerance"] = e.tolerance;
  j["status"] = e.status;
  j["pass"] = e.pass;
  return j;
}

json to_json(const SelectionCertificate& c) {
  json values = json::array();
  for (double y : c.selection.values()) values.push_back(round12(y));
  return json{{"kind", std::string(to_string(c.kind))},
              {"variation", round12(c.variation)},
              {"lipschitz", round12(c.lipschitz)},
              {"parent_variation", round12(c.parent_variation)},
              {"parent_lipschitz", round12(c.parent_lipschitz)},
              {"membership_checked", c.membership_checked},
              {"a", round12(c.selection.grid().a())},
              {"b", round12(c.selection.grid().b())},
              {"values", std::move(values)}};
}

json to_json(const RegularityReport& r, const std::string& fixture) {
  json out = json::array();
  auto entry = [&](const char* theorem, const char* check, double measured, double bound,
                   bool pass) {
    out.push_back(json{{"theorem", theorem},
                       {"check", check},
                       {"fixture", fixture},
                       {"rho", round12(r.rho)},
                       {"measured", round12(measured)},
                       {"bound", round12(bound)},
                       {"pass", pass}});
  };
  entry("3.3", "sup_bound", r.sup_hd_to_zero, r.bound_sup, r.sup_ok);
  if (r.bound_L0) {
    entry("3.5", "total_variation", r.total_variation, *r.variation_bound, *r.variation_ok);
    entry("3.6", "lipschitz", r.lipschitz, *r.bound_L0, *r.lipschitz_ok);
  }
  return out;
}

namespace {

void write_row(std::ostream& os, std::initializer_list<double> cells) {
  bool first = true;
  for (double c : cells) {
    if (!first) os << ',';
    os << format_real(c);
    first = false;
  }
  os << '\n';
}

}  // namespace

void write_map_csv(std::ostream& os, const GridMap& f) {
  os << "u,lo,hi\n";
  for (int i = 0; i <= f.segments(); ++i) write_row(os, {f.grid().node(i), f[i].lo(), f[i].hi()});
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  os << "t,u\n";
  for (int i = 0; i <= t.grid.segments(); ++i) write_row(os, {t.grid.node(i), t.values[i]});
}

void write_funnel_csv(std::ostream& os, const GridMap& envelope) {
  os << "t,lo,hi\n";
  for (int i = 0; i <= envelope.segments(); ++i) {
    write_row(os, {envelope.grid().node(i), envelope[i].lo(), envelope[i].hi()});
  }
}

void write_selections_csv(std::ostream& os, const GridMap& g) {
  os << "u,lower,upper,midpoint\n";
  const Selection mid = midpoint_selection(g);
  for (int i = 0; i <= g.segments(); ++i) {
    write_row(os, {g.grid().node(i), g[i].lo(), g[i].hi(), mid[i]});
  }
}

}  // namespace setfrac
