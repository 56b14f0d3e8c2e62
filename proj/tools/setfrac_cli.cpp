// setfrac: command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 parameter
// error, 4 non-convergence. Results are computed in full before the output
// file is opened, so nothing is written on exit codes 2 and 3.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "setfrac/fixtures.hpp"
#include "setfrac/format.hpp"
#include "setfrac/frac_integral.hpp"
#include "setfrac/inclusion.hpp"
#include "setfrac/io.hpp"
#include "setfrac/regularity.hpp"
#include "setfrac/selections.hpp"
#include "setfrac/verify.hpp"

namespace {

using namespace setfrac;
using nlohmann::json;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kParamError = 3, kNoConvergence = 4 };

struct RunConfig {
  std::optional<double> rho;
  std::optional<double> alpha;
  int grid = 256;
  int samples = 2000;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  int max_iter = 200;
  std::string input;
  std::string output;
  std::string format = "csv";
  std::string policy = "midpoint";
  std::string builtin;
  std::vector<std::string> params;
  std::optional<double> a, b, t0, t_end, u0, u1;
};

Params parse_params(const std::vector<std::string>& items) {
  Params out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("parameter '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    double value = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw InvalidArgument("parameter '" + key + "' is not a number");
    }
    out[key] = value;
  }
  return out;
}

double require_rho(const RunConfig& cfg) {
  const double rho = cfg.rho.value_or(std::numeric_limits<double>::quiet_NaN());
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw InvalidArgument("precondition rho > 0 violated (--rho " +
                          (cfg.rho ? format_real(*cfg.rho) : std::string("missing")) + ")");
  }
  return rho;
}

void check_common(const RunConfig& cfg) {
  if (cfg.grid < 1) throw InvalidArgument("--grid must be a positive integer");
  if (cfg.samples < 1) throw InvalidArgument("--samples must be a positive integer");
  if (!(cfg.tol > 0.0)) throw InvalidArgument("--tol must be positive");
  if (cfg.max_iter < 1) throw InvalidArgument("--max-iter must be positive");
  if (cfg.format != "csv" && cfg.format != "json") {
    throw InvalidArgument("--format must be csv or json");
  }
}

GridMap load_map(const RunConfig& cfg) {
  if (!cfg.input.empty()) return load_map_spec(cfg.input, cfg.grid);
  if (cfg.builtin.empty()) throw InputError("no map given: pass --input FILE or --builtin NAME");
  try {
    return builtin_map(cfg.builtin, cfg.a.value_or(0.0), cfg.b.value_or(1.0), cfg.grid,
                       parse_params(cfg.params));
  } catch (const InvalidArgument& e) {
    throw InputError(e.what());
  }
}

std::string map_name(const RunConfig& cfg) {
  return cfg.builtin.empty() ? cfg.input : cfg.builtin;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InputError("cannot write '" + cfg.output + "'");
  out << text;
}

int cmd_integrate(const RunConfig& cfg) {
  check_common(cfg);
  const double rho = require_rho(cfg);
  const GridMap f = load_map(cfg);
  const GridMap g = rl_setvalued(f, rho);
  std::ostringstream os;
  if (cfg.format == "json") {
    json values = json::array();
    for (int i = 0; i <= g.segments(); ++i) {
      json row = to_json(g[i]);
      row["u"] = round12(g.grid().node(i));
      values.push_back(std::move(row));
    }
    os << json{{"a", g.a()}, {"b", g.b()}, {"segments", g.segments()}, {"rho", round12(rho)},
               {"values", std::move(values)}}.dump(2)
       << '\n';
  } else {
    write_map_csv(os, g);
  }
  emit(cfg, os.str());
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  check_common(cfg);
  VerifyConfig vc;
  vc.segments = cfg.grid;
  vc.samples = cfg.samples;
  vc.seed = cfg.seed;
  if (cfg.rho) vc.rhos = {require_rho(cfg)};
  if (!cfg.input.empty()) vc.fixtures = load_fixture_file(cfg.input, cfg.grid);
  const auto entries = run_verification(vc);
  json out = json::array();
  for (const auto& e : entries) out.push_back(to_json(e));
  emit(cfg, out.dump(2) + "\n");
  const bool ok = all_pass(entries);
  if (!ok) {
    for (const auto& e : entries) {
      if (!e.pass) {
        std::cerr << "FAIL theorem " << e.theorem << " " << e.check << " fixture=" << e.fixture
                  << " rho=" << format_real(e.rho) << "\n";
      }
    }
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_selections(const RunConfig& cfg) {
  check_common(cfg);
  const double rho = require_rho(cfg);
  const GridMap f = load_map(cfg);
  const GridMap g = rl_setvalued(f, rho);
  std::ostringstream os;
  if (cfg.format == "json") {
    const auto [lower, upper] = extremal_selections(g);
    json certs = json::array();
    certs.push_back(to_json(certify(g, lower, SelectionKind::LowerExtremal)));
    certs.push_back(to_json(certify(g, upper, SelectionKind::UpperExtremal)));
    certs.push_back(to_json(certify(g, midpoint_selection(g), SelectionKind::Midpoint)));
    for (auto kind : {RegularityKind::BoundedVariation, RegularityKind::Lipschitz}) {
      json c = to_json(regular_selection(g, kind));
      c["regularity"] = std::string(to_string(kind));
      certs.push_back(std::move(c));
    }
    os << json{{"fixture", map_name(cfg)}, {"rho", round12(rho)}, {"certificates", certs}}.dump(2)
       << '\n';
  } else {
    write_selections_csv(os, g);
  }
  emit(cfg, os.str());
  return kOk;
}

CaputoProblem build_problem(const RunConfig& cfg) {
  CaputoProblem p;
  if (!cfg.input.empty()) {
    p = load_problem(cfg.input);
  } else {
    if (cfg.builtin.empty()) {
      throw InputError("no problem given: pass --input FILE or --builtin NAME");
    }
    BuiltinField field;
    try {
      field = builtin_field(cfg.builtin, parse_params(cfg.params));
    } catch (const InvalidArgument& e) {
      throw InputError(e.what());
    }
    p.rhs = std::move(field.field);
    p.rhs_lipschitz_u = field.lipschitz_u;
  }
  if (cfg.alpha) p.alpha = *cfg.alpha;
  if (cfg.t0) p.t0 = *cfg.t0;
  if (cfg.t_end) p.T = *cfg.t_end;
  if (cfg.u0) p.u0 = *cfg.u0;
  if (cfg.u1) p.u1 = *cfg.u1;
  p.validate();
  return p;
}

int cmd_inclusion(const RunConfig& cfg) {
  check_common(cfg);
  const CaputoProblem p = build_problem(cfg);
  if (p.contraction_factor() >= 1.0) {
    std::cerr << "warning: contraction factor L*(T-t0)^alpha/Gamma(alpha+1) = "
              << format_real(p.contraction_factor()) << " >= 1; Picard iteration may diverge\n";
  }
  std::ostringstream os;
  try {
    if (cfg.policy == "funnel") {
      const Funnel funnel = solution_funnel(p, cfg.grid, cfg.max_iter, cfg.tol);
      write_funnel_csv(os, funnel.envelope);
      std::cerr << "iterations_used=" << funnel.lower.iterations_used << "/"
                << funnel.upper.iterations_used
                << " residual=" << format_real(std::max(funnel.lower.residual, funnel.upper.residual))
                << "\n";
      if (funnel.monotonicity_warning) {
        std::cerr << "warning: rhs endpoints are not nondecreasing in u; the funnel is an "
                     "envelope of two policy trajectories, not an enclosure\n";
      }
    } else {
      const Policy policy = parse_policy(cfg.policy);
      const Trajectory traj = solve_with_policy(p, policy, cfg.grid, cfg.max_iter, cfg.tol);
      write_trajectory_csv(os, traj);
      std::cerr << "iterations_used=" << traj.iterations_used
                << " residual=" << format_real(traj.residual) << "\n";
    }
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\nresidual=" << format_real(e.residual()) << "\n";
    return kNoConvergence;
  }
  emit(cfg, os.str());
  return kOk;
}

int cmd_bounds(const RunConfig& cfg) {
  check_common(cfg);
  const double rho = require_rho(cfg);
  const GridMap f = load_map(cfg);
  const RegularityReport r = regularity_report(f, rho);
  const std::string name = map_name(cfg);
  json out{{"fixture", name},
           {"rho", round12(rho)},
           {"M", round12(sup_bound(f))},
           {"sup_hd_to_zero", round12(r.sup_hd_to_zero)},
           {"total_variation", round12(r.total_variation)},
           {"lipschitz", round12(r.lipschitz)},
           {"bound_sup", round12(r.bound_sup)},
           {"bound_L0", r.bound_L0 ? json(round12(*r.bound_L0)) : json(nullptr)},
           {"entries", to_json(r, name)}};
  emit(cfg, out.dump(2) + "\n");
  const bool ok = r.sup_ok && r.variation_ok.value_or(true) && r.lipschitz_ok.value_or(true);
  return ok ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--grid", cfg.grid, "Number of uniform grid segments")->capture_default_str();
  sub->add_option("--input", cfg.input, "Input JSON file");
  sub->add_option("--output", cfg.output, "Output file (default: stdout)");
  sub->add_option("--format", cfg.format, "Output format: csv or json")->capture_default_str();
  sub->add_option("--builtin", cfg.builtin, "Builtin map or rhs family instead of --input");
  sub->add_option("--param", cfg.params, "Builtin family parameter key=value (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"setfrac: Riemann-Liouville integrals of interval-valued maps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* integrate = app.add_subcommand("integrate", "Set-valued RL integral of a map, as u,lo,hi CSV");
  add_common(integrate, cfg);
  integrate->add_option("--rho", cfg.rho, "Fractional order rho > 0");
  integrate->add_option("--a", cfg.a, "Domain start for --builtin (default 0)");
  integrate->add_option("--b", cfg.b, "Domain end for --builtin (default 1)");

  auto* verify = app.add_subcommand("verify", "Run the regularity theorem suite, JSON report");
  add_common(verify, cfg);
  verify->add_option("--rho", cfg.rho, "Restrict the suite to one order");
  verify->add_option("--samples", cfg.samples, "Oracle selections per check")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed of the selection sampler")->capture_default_str();

  auto* selections = app.add_subcommand("selections", "Extremal, midpoint and regular selections");
  add_common(selections, cfg);
  selections->add_option("--rho", cfg.rho, "Fractional order rho > 0");
  selections->add_option("--a", cfg.a, "Domain start for --builtin (default 0)");
  selections->add_option("--b", cfg.b, "Domain end for --builtin (default 1)");

  auto* inclusion = app.add_subcommand("inclusion", "Solve a Caputo inclusion, 1 < alpha < 2");
  add_common(inclusion, cfg);
  inclusion->add_option("--alpha", cfg.alpha, "Caputo order (overrides the problem file)");
  inclusion->add_option("--policy", cfg.policy, "lower, upper, midpoint or funnel")
      ->capture_default_str();
  inclusion->add_option("--tol", cfg.tol, "Picard stopping tolerance")->capture_default_str();
  inclusion->add_option("--max-iter", cfg.max_iter, "Picard iteration cap")->capture_default_str();
  inclusion->add_option("--t0", cfg.t0, "Initial time");
  inclusion->add_option("--T", cfg.t_end, "Final time");
  inclusion->add_option("--u0", cfg.u0, "Initial value");
  inclusion->add_option("--u1", cfg.u1, "Initial derivative");

  auto* bounds = app.add_subcommand("bounds", "Measured regularity of J^rho F against its bounds");
  add_common(bounds, cfg);
  bounds->add_option("--rho", cfg.rho, "Fractional order rho > 0");
  bounds->add_option("--a", cfg.a, "Domain start for --builtin (default 0)");
  bounds->add_option("--b", cfg.b, "Domain end for --builtin (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParamError;
  }

  try {
    if (*integrate) return cmd_integrate(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*selections) return cmd_selections(cfg);
    if (*inclusion) return cmd_inclusion(cfg);
    if (*bounds) return cmd_bounds(cfg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kParamError;
  }
  return kParamError;
}
