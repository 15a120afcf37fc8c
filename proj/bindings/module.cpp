// pybind11 bindings for the c2qm core: coordinates, the symbolic algebra,
// the lifted operators, monopole states and their fields, and the identity
// suite. The python layer is a thin veneer; all semantics live in C++.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "c2qm/coords.hpp"
#include "c2qm/monopole.hpp"
#include "c2qm/numerics.hpp"
#include "c2qm/operators.hpp"
#include "c2qm/oracle.hpp"
#include "c2qm/phi_expr.hpp"
#include "c2qm/serialize.hpp"
#include "c2qm/symfunc.hpp"
#include "c2qm/verify.hpp"

namespace py = pybind11;
using namespace c2qm;

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum mechanics on C^2: monopole states, gauge fields, identity checks";

  py::register_exception<BranchPointError>(m, "BranchPointError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
  py::register_exception<DivergentIntegralError>(m, "DivergentIntegralError",
                                                 PyExc_ArithmeticError);
  py::register_exception<ChargeMeasurementError>(m, "ChargeMeasurementError",
                                                 PyExc_ValueError);
  py::register_exception<PhiParseError>(m, "PhiParseError", PyExc_ValueError);

  // --- coordinates ---------------------------------------------------------

  py::class_<CPoint>(m, "CPoint")
      .def(py::init([](std::complex<double> z1, std::complex<double> z2) {
             return CPoint{z1, z2};
           }),
           py::arg("z1"), py::arg("z2"))
      .def_readwrite("z1", &CPoint::z1)
      .def_readwrite("z2", &CPoint::z2)
      .def("radius", &CPoint::radius)
      .def("__repr__", [](const CPoint& p) {
        return "CPoint(z1=(" + std::to_string(p.z1.real()) + "+" + std::to_string(p.z1.imag()) +
               "j), z2=(" + std::to_string(p.z2.real()) + "+" + std::to_string(p.z2.imag()) +
               "j))";
      });

  py::class_<R3Point>(m, "R3Point")
      .def(py::init([](double x1, double x2, double x3) {
             return R3Point{x1, x2, x3};
           }),
           py::arg("x1"), py::arg("x2"), py::arg("x3"))
      .def_readwrite("x1", &R3Point::x1)
      .def_readwrite("x2", &R3Point::x2)
      .def_readwrite("x3", &R3Point::x3)
      .def("norm", &R3Point::norm)
      .def("__repr__", [](const R3Point& x) {
        return "R3Point(" + std::to_string(x.x1) + ", " + std::to_string(x.x2) + ", " +
               std::to_string(x.x3) + ")";
      });

  py::class_<EulerCoords>(m, "EulerCoords")
      .def(py::init<double, double, double, double>(), py::arg("r"), py::arg("theta"),
           py::arg("phi"), py::arg("gamma"))
      .def_readonly("r", &EulerCoords::r)
      .def_readonly("theta", &EulerCoords::theta)
      .def_readonly("phi", &EulerCoords::phi)
      .def_readonly("gamma", &EulerCoords::gamma);

  py::class_<EulerDecomposition>(m, "EulerDecomposition")
      .def_readonly("coords", &EulerDecomposition::coords)
      .def_readonly("pole_canonicalized", &EulerDecomposition::pole_canonicalized);

  py::class_<SphPoint>(m, "SphPoint")
      .def(py::init([](double r, double theta, double phi) {
             return SphPoint{r, theta, phi};
           }),
           py::arg("r"), py::arg("theta"), py::arg("phi"))
      .def_readwrite("r", &SphPoint::r)
      .def_readwrite("theta", &SphPoint::theta)
      .def_readwrite("phi", &SphPoint::phi);

  m.def("euler_to_c2", &euler_to_c2, py::arg("e"));
  m.def("c2_to_euler", &c2_to_euler, py::arg("p"));
  m.def("hopf_map", &hopf_map, py::arg("p"));
  m.def("to_spherical", &to_spherical, py::arg("x"));
  m.def("from_spherical", &from_spherical, py::arg("s"));

  // --- symbolic algebra ----------------------------------------------------

  py::enum_<Var>(m, "Var")
      .value("z1", Var::z1)
      .value("z1s", Var::z1s)
      .value("z2", Var::z2)
      .value("z2s", Var::z2s);

  py::class_<SymFunc>(m, "SymFunc")
      .def(py::init<>())
      .def_static("zero", &SymFunc::zero)
      .def_static("one", &SymFunc::one)
      .def_static("constant", &SymFunc::constant, py::arg("c"))
      .def_static("variable", &SymFunc::variable, py::arg("v"))
      .def_static("r_power",
                  [](int num, int den) { return SymFunc::r_power(Rational(num, den)); },
                  py::arg("num"), py::arg("den") = 1)
      .def("size", &SymFunc::size)
      .def("is_zero", &SymFunc::is_zero)
      .def("is_restricted", &SymFunc::is_restricted)
      .def("conjugate", &SymFunc::conjugate)
      .def("inverse_term", &SymFunc::inverse_term)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__rmul__",
           [](const SymFunc& f, std::complex<double> c) { return scale(c, f); })
      .def("__mul__", [](const SymFunc& f, std::complex<double> c) { return scale(c, f); })
      .def("__neg__", [](const SymFunc& f) { return scale(-1.0, f); })
      .def("__repr__", [](const SymFunc& f) { return to_string(f); });

  m.def("scale", &scale, py::arg("c"), py::arg("f"));
  m.def("r_times",
        [](const SymFunc& f, int num, int den) { return r_times(f, Rational(num, den)); },
        py::arg("f"), py::arg("num"), py::arg("den") = 1);
  m.def("partial", &partial, py::arg("f"), py::arg("v"));
  m.def("poisson", &poisson, py::arg("f"), py::arg("g"));
  m.def("eval", [](const SymFunc& f, const CPoint& p) { return eval(f, p); }, py::arg("f"),
        py::arg("p"));
  m.def("to_string", &to_string, py::arg("f"));
  m.def("symfunc_to_json", &symfunc_to_json, py::arg("f"));
  m.def("symfunc_from_json", &symfunc_from_json, py::arg("text"));
  m.def("parse_phi", &parse_phi, py::arg("text"),
        "Parse a polynomial in x1, x2, x3 and integer powers of r.");
  m.def(
      "approx_equal",
      [](const SymFunc& f, const SymFunc& g, double tol, int points, std::uint64_t seed) {
        CPointSampler sampler(seed);
        const OracleResult res = approx_equal(f, g, sampler, tol, points);
        return py::make_tuple(res.ok, res.max_dev);
      },
      py::arg("f"), py::arg("g"), py::arg("tol") = kDefaultSymTol, py::arg("points") = 25,
      py::arg("seed") = kDefaultSeed);

  // --- lifted operators ------------------------------------------------------

  py::enum_<Axis>(m, "Axis").value("x1", Axis::x1).value("x2", Axis::x2).value("x3", Axis::x3);

  m.def("hopf_coordinate", &hopf_coordinate, py::arg("i"));
  m.def("laplace", &laplace, py::arg("f"));
  m.def("position", &position, py::arg("i"), py::arg("f"));
  m.def("velocity", &velocity, py::arg("i"), py::arg("f"));
  m.def("angular_momentum", &angular_momentum, py::arg("i"), py::arg("f"));
  m.def("v4", &v4, py::arg("f"));

  // --- monopole sectors ------------------------------------------------------

  py::class_<MonopoleState>(m, "MonopoleState")
      .def_readonly("phi", &MonopoleState::phi)
      .def_readonly("kappa", &MonopoleState::kappa)
      .def_readonly("delta", &MonopoleState::delta)
      .def_readonly("xi", &MonopoleState::xi)
      .def("full", &MonopoleState::full);

  m.def("xi_factor", &xi_factor, py::arg("kappa"), py::arg("delta"));
  m.def("make_state", &make_state, py::arg("phi"), py::arg("kappa"), py::arg("delta"));
  m.def("measure_charge", &measure_charge, py::arg("state"), py::arg("tol") = kDefaultSymTol,
        py::arg("seed") = kDefaultSeed);

  py::class_<SphericalComponents>(m, "SphericalComponents")
      .def_readonly("a_r", &SphericalComponents::a_r)
      .def_readonly("a_theta", &SphericalComponents::a_theta)
      .def_readonly("a_phi", &SphericalComponents::a_phi);

  py::class_<GaugePotential>(m, "GaugePotential")
      .def_property_readonly("kappa", &GaugePotential::kappa)
      .def_property_readonly("delta", &GaugePotential::delta)
      .def("cartesian", &GaugePotential::cartesian, py::arg("i"),
           py::return_value_policy::copy)
      .def("spherical_at", &GaugePotential::spherical_at, py::arg("r"), py::arg("theta"),
           py::arg("phi"))
      .def("a_phi_closed", &GaugePotential::a_phi_closed, py::arg("r"), py::arg("theta"));

  m.def("gauge_potential", &gauge_potential, py::arg("kappa"), py::arg("delta"));
  m.def("extract_potential", &extract_potential, py::arg("xi"));
  m.def("a_phi_closed_form", &a_phi_closed_form, py::arg("kappa"), py::arg("delta"),
        py::arg("r"), py::arg("theta"));
  m.def("magnetic_field", &magnetic_field, py::arg("kappa"), py::arg("x"));

  py::class_<StringClassification>(m, "StringClassification")
      .def_readonly("north", &StringClassification::north)
      .def_readonly("south", &StringClassification::south)
      .def("__repr__", [](const StringClassification& s) {
        return std::string("StringClassification(north=") + (s.north ? "True" : "False") +
               ", south=" + (s.south ? "True" : "False") + ")";
      });

  m.def("string_singularities", &string_singularities, py::arg("kappa"), py::arg("delta"));

  m.def(
      "curl_check",
      [](int kappa, int delta, const std::vector<SphPoint>& points) {
        return curl_check(kappa, delta, points, QuadratureConfig{});
      },
      py::arg("kappa"), py::arg("delta"), py::arg("points"));

  py::class_<ImaginaryGaugeResult>(m, "ImaginaryGaugeResult")
      .def_readonly("kappa", &ImaginaryGaugeResult::kappa)
      .def_readonly("xi", &ImaginaryGaugeResult::xi)
      .def_readonly("xi_radial", &ImaginaryGaugeResult::xi_radial)
      .def_readonly("xi_fiber", &ImaginaryGaugeResult::xi_fiber)
      .def_readonly("potential", &ImaginaryGaugeResult::potential)
      .def_readonly("im_a", &ImaginaryGaugeResult::im_a)
      .def_readonly("gauged_factor", &ImaginaryGaugeResult::gauged_factor);

  m.def("imaginary_gauge", &imaginary_gauge, py::arg("kappa"));

  // --- numerics ----------------------------------------------------------------

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("samples", &QuadratureConfig::samples)
      .def_readwrite("seed", &QuadratureConfig::seed)
      .def_readwrite("r_min", &QuadratureConfig::r_min)
      .def_readwrite("r_max", &QuadratureConfig::r_max)
      .def_readwrite("fd_step", &QuadratureConfig::fd_step)
      .def_readwrite("fd_step_second", &QuadratureConfig::fd_step_second)
      .def_readwrite("sigma_c2", &QuadratureConfig::sigma_c2)
      .def_readwrite("sigma_r3", &QuadratureConfig::sigma_r3);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("value", &McEstimate::value)
      .def_readonly("std_error", &McEstimate::std_error)
      .def("__repr__", [](const McEstimate& e) {
        return "McEstimate(value=" + std::to_string(e.value) +
               ", std_error=" + std::to_string(e.std_error) + ")";
      });

  m.def(
      "mc_norm_c2",
      [](const SymFunc& f, const std::function<double(double)>& envelope,
         const QuadratureConfig& cfg) { return mc_norm_c2(f, envelope, cfg); },
      py::arg("f"), py::arg("envelope"), py::arg("cfg") = QuadratureConfig{});
  m.def(
      "mc_norm_r3",
      [](const std::function<std::complex<double>(const R3Point&)>& g,
         const QuadratureConfig& cfg) { return mc_norm_r3(g, cfg); },
      py::arg("g"), py::arg("cfg") = QuadratureConfig{});
  m.def(
      "monopole_flux",
      [](int kappa, double radius, int n_theta, int n_phi) {
        return sphere_flux([kappa](const R3Point& x) { return magnetic_field(kappa, x); },
                           radius, n_theta, n_phi);
      },
      py::arg("kappa"), py::arg("radius") = 1.0, py::arg("n_theta") = 256,
      py::arg("n_phi") = 256,
      "Flux of the monopole field through a sphere (equals -2 pi kappa).");

  // --- the identity suite --------------------------------------------------

  m.def(
      "verify_json",
      [](int kappa_max, py::object delta, std::uint64_t seed, std::int64_t samples,
         int oracle_points, int curl_points, int aphi_points, int fd_states) {
        VerifyOptions opts;
        opts.kappa_max = kappa_max;
        if (!delta.is_none()) opts.delta = delta.cast<int>();
        opts.seed = seed;
        opts.mc_samples = samples;
        opts.oracle_points = oracle_points;
        opts.curl_points = curl_points;
        opts.aphi_points = aphi_points;
        opts.fd_states = fd_states;
        return report_to_json(run_verification(opts));
      },
      py::arg("kappa_max") = 2, py::arg("delta") = py::none(), py::arg("seed") = 42,
      py::arg("samples") = 20000, py::arg("oracle_points") = 25, py::arg("curl_points") = 25,
      py::arg("aphi_points") = 25, py::arg("fd_states") = 6,
      "Run the identity suite and return the canonical JSON report.");
}
