#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "setfrac/fixtures.hpp"
#include "setfrac/frac_integral.hpp"
#include "setfrac/inclusion.hpp"
#include "setfrac/io.hpp"
#include "setfrac/regularity.hpp"
#include "setfrac/selections.hpp"
#include "setfrac/verify.hpp"

namespace py = pybind11;
using namespace setfrac;

namespace {

GridMap map_from_lists(double a, double b, const std::vector<double>& lo,
                       const std::vector<double>& hi) {
  if (lo.size() != hi.size() || lo.size() < 2) {
    throw InvalidArgument("lo and hi need the same length >= 2");
  }
  std::vector<Interval> values;
  for (std::size_t i = 0; i < lo.size(); ++i) values.emplace_back(lo[i], hi[i]);
  return GridMap(UniformGrid(a, b, static_cast<int>(lo.size()) - 1), std::move(values));
}

std::vector<double> nodes(const UniformGrid& g) {
  std::vector<double> out;
  for (int i = 0; i <= g.segments(); ++i) out.push_back(g.node(i));
  return out;
}

CaputoProblem make_problem(const py::object& rhs, const Params& params, double alpha, double t0,
                           double t_end, double u0, double u1, std::optional<double> lipschitz_u) {
  CaputoProblem p;
  p.alpha = alpha;
  p.t0 = t0;
  p.T = t_end;
  p.u0 = u0;
  p.u1 = u1;
  if (py::isinstance<py::str>(rhs)) {
    BuiltinField b = builtin_field(rhs.cast<std::string>(), params);
    p.rhs = std::move(b.field);
    p.rhs_lipschitz_u = lipschitz_u.value_or(b.lipschitz_u);
  } else {
    // A Python callable (t, u) -> (lo, hi).
    auto fn = rhs.cast<std::function<std::pair<double, double>(double, double)>>();
    p.rhs = [fn](double t, double u) {
      const auto [lo, hi] = fn(t, u);
      return Interval(lo, hi);
    };
    p.rhs_lipschitz_u = lipschitz_u.value_or(0.0);
  }
  return p;
}

py::dict trajectory_dict(const Trajectory& t) {
  py::dict d;
  d["t"] = nodes(t.grid);
  d["u"] = t.values;
  d["iterations_used"] = t.iterations_used;
  d["residual"] = t.residual;
  d["contraction_warning"] = t.contraction_warning;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Riemann-Liouville integrals of interval-valued maps";

  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def_property_readonly("width", &Interval::width)
      .def("__eq__", [](const Interval& a, const Interval& b) { return a == b; })
      .def("__contains__", [](const Interval& a, double x) { return contains(a, x); })
      .def("__repr__", [](const Interval& a) { return "Interval" + to_string(a); });

  m.def("hausdorff", &hausdorff, py::arg("a"), py::arg("b"));
  m.def("hausdorff_to_zero", &hausdorff_to_zero, py::arg("a"));
  m.def("convex_combo", &convex_combo, py::arg("a"), py::arg("b"), py::arg("lam"));
  m.def("gamma_fn", &gamma_fn, py::arg("x"));

  py::class_<GridMap>(m, "GridMap")
      .def(py::init(&map_from_lists), py::arg("a"), py::arg("b"), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("a", &GridMap::a)
      .def_property_readonly("b", &GridMap::b)
      .def_property_readonly("segments", &GridMap::segments)
      .def_property_readonly("nodes", [](const GridMap& f) { return nodes(f.grid()); })
      .def_property_readonly("lo", &GridMap::lower)
      .def_property_readonly("hi", &GridMap::upper)
      .def("__call__", [](const GridMap& f, double u) { return eval(f, u); })
      .def("__len__", [](const GridMap& f) { return f.grid().size(); })
      .def("__getitem__", [](const GridMap& f, std::size_t i) {
        if (i >= f.grid().size()) throw py::index_error();
        return f[i];
      });

  m.def("builtin_map", &builtin_map, py::arg("kind"), py::arg("a") = 0.0, py::arg("b") = 1.0,
        py::arg("segments") = 256, py::arg("params") = Params{});
  m.def("builtin_map_names", &builtin_map_names);
  m.def("sup_bound", &sup_bound, py::arg("f"));

  m.def("rl_scalar",
        [](double a, double b, const std::vector<double>& values, double rho, std::optional<int> n) {
          const Selection s(UniformGrid(a, b, static_cast<int>(values.size()) - 1), values);
          return rl_scalar(s, rho, n.value_or(static_cast<int>(values.size()) - 1));
        },
        py::arg("a"), py::arg("b"), py::arg("values"), py::arg("rho"), py::arg("n") = py::none(),
        "J^rho of the piecewise-linear function with the given node values, at node n (default: b).");
  m.def("rl_setvalued", py::overload_cast<const GridMap&, double>(&rl_setvalued), py::arg("f"),
        py::arg("rho"));
  m.def("rl_selection_oracle", &rl_selection_oracle, py::arg("f"), py::arg("rho"), py::arg("n"),
        py::arg("samples") = 2000, py::arg("seed") = 42);

  m.def("total_variation", &total_variation, py::arg("f"));
  m.def("lipschitz_constant", &lipschitz_constant, py::arg("f"));
  m.def("bound_sup", &bound_sup, py::arg("rho"), py::arg("M"), py::arg("a"), py::arg("b"));
  m.def("bound_L0", &bound_L0, py::arg("rho"), py::arg("M"), py::arg("a"), py::arg("b"));
  m.def("continuity_modulus", &continuity_modulus, py::arg("f"), py::arg("rho"), py::arg("u"),
        py::arg("v"));

  m.def("extremal_selections",
        [](const GridMap& g) {
          auto [lo, hi] = extremal_selections(g);
          return std::make_pair(std::vector<double>(lo.values().begin(), lo.values().end()),
                                std::vector<double>(hi.values().begin(), hi.values().end()));
        },
        py::arg("g"));
  m.def("regular_selection",
        [](const GridMap& g, const std::string& kind) {
          RegularityKind k;
          if (kind == "bounded-variation") {
            k = RegularityKind::BoundedVariation;
          } else if (kind == "lipschitz") {
            k = RegularityKind::Lipschitz;
          } else {
            throw InvalidArgument("kind must be 'bounded-variation' or 'lipschitz'");
          }
          return to_json(regular_selection(g, k)).dump();
        },
        py::arg("g"), py::arg("kind") = "bounded-variation",
        "Certificate of the constructive regular selection, as a JSON string.");

  m.def("solve_inclusion",
        [](const py::object& rhs, const Params& params, double alpha, double t0, double t_end,
           double u0, double u1, const std::string& policy, int segments, int max_iter, double tol,
           std::optional<double> lipschitz_u) {
          const CaputoProblem p = make_problem(rhs, params, alpha, t0, t_end, u0, u1, lipschitz_u);
          Trajectory t = [&] {
            py::gil_scoped_release release;
            return solve_with_policy(p, parse_policy(policy), segments, max_iter, tol);
          }();
          return trajectory_dict(t);
        },
        py::arg("rhs"), py::arg("params") = Params{}, py::arg("alpha") = 1.5, py::arg("t0") = 0.0,
        py::arg("T") = 1.0, py::arg("u0") = 0.0, py::arg("u1") = 0.0,
        py::arg("policy") = "midpoint", py::arg("segments") = 256, py::arg("max_iter") = 200,
        py::arg("tol") = 1e-10, py::arg("lipschitz_u") = py::none(),
        "rhs is a builtin field name or a callable (t, u) -> (lo, hi).");
  m.def("solution_funnel",
        [](const py::object& rhs, const Params& params, double alpha, double t0, double t_end,
           double u0, double u1, int segments, int max_iter, double tol,
           std::optional<double> lipschitz_u) {
          const CaputoProblem p = make_problem(rhs, params, alpha, t0, t_end, u0, u1, lipschitz_u);
          const Funnel f = solution_funnel(p, segments, max_iter, tol);
          py::dict d;
          d["t"] = nodes(f.envelope.grid());
          d["lo"] = f.envelope.lower();
          d["hi"] = f.envelope.upper();
          d["monotonicity_warning"] = f.monotonicity_warning;
          return d;
        },
        py::arg("rhs"), py::arg("params") = Params{}, py::arg("alpha") = 1.5, py::arg("t0") = 0.0,
        py::arg("T") = 1.0, py::arg("u0") = 0.0, py::arg("u1") = 0.0, py::arg("segments") = 256,
        py::arg("max_iter") = 200, py::arg("tol") = 1e-10, py::arg("lipschitz_u") = py::none());
  m.def("builtin_field_names", &builtin_field_names);

  m.def("verify",
        [](std::optional<std::vector<double>> rhos, int segments, int samples, std::uint64_t seed) {
          VerifyConfig config;
          if (rhos) config.rhos = *rhos;
          config.segments = segments;
          config.samples = samples;
          config.seed = seed;
          nlohmann::json doc = nlohmann::json::array();
          for (const CheckEntry& e : run_verification(config)) doc.push_back(to_json(e));
          return doc.dump(2);
        },
        py::arg("rhos") = py::none(), py::arg("segments") = 256, py::arg("samples") = 2000,
        py::arg("seed") = 42, "Runs the theorem suite; returns the JSON report text.");
}
