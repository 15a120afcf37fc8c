// c2qm: quantum mechanics on C^2 from the command line.
//
//   c2qm verify [options]   run the identity suite, print a report
//   c2qm field [options]    sample the monopole gauge potential and field
//   c2qm state [options]    build a monopole state and evaluate it
//
// Exit codes: 0 success, 1 failed verification or I/O error, 2 usage error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "c2qm/coords.hpp"
#include "c2qm/monopole.hpp"
#include "c2qm/operators.hpp"
#include "c2qm/phi_expr.hpp"
#include "c2qm/serialize.hpp"
#include "c2qm/symfunc.hpp"
#include "c2qm/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "c2qm: cannot open " << out_path << " for writing\n";
    return 1;
  }
  out << text;
  return out.good() ? 0 : 1;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  c2qm::VerifyOptions opts;
  std::string format = "text";
  std::string out_path;
  std::optional<int> delta;
};

int run_verify(const VerifyArgs& args) {
  c2qm::VerifyOptions opts = args.opts;
  opts.delta = args.delta;
  const c2qm::VerifyReport report = c2qm::run_verification(opts);
  const std::string text =
      args.format == "json" ? c2qm::report_to_json(report) : c2qm::report_to_text(report);
  const int io = write_output(text, args.out_path);
  if (io != 0) return io;
  return report.pass ? 0 : 1;
}

// --- field ----------------------------------------------------------------

struct FieldArgs {
  int kappa = 1;
  int delta = 1;
  double radius = 1.0;
  std::string grid = "8x16";
  std::string format = "csv";
  std::string out_path;
};

int run_field(const FieldArgs& args) {
  int n_theta = 0, n_phi = 0;
  if (std::sscanf(args.grid.c_str(), "%dx%d", &n_theta, &n_phi) != 2 || n_theta < 1 ||
      n_phi < 1) {
    std::cerr << "c2qm: --grid expects NxM with positive integers, got '" << args.grid << "'\n";
    return 2;
  }
  const c2qm::GaugePotential pot = c2qm::gauge_potential(args.kappa, args.delta);

  struct Row {
    c2qm::R3Point x;
    std::array<double, 3> a;
    std::array<double, 3> b;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  for (int j = 0; j < n_theta; ++j) {
    const double theta = kPi * (j + 0.5) / n_theta;
    for (int k = 0; k < n_phi; ++k) {
      const double phi = 2.0 * kPi * (k + 0.5) / n_phi;
      const c2qm::CPoint z =
          c2qm::euler_to_c2(c2qm::EulerCoords(args.radius, theta, phi, 0.0));
      Row row;
      row.x = c2qm::hopf_map(z);
      for (c2qm::Axis i : c2qm::kAxes)
        row.a[static_cast<int>(i)] = c2qm::eval(pot.cartesian(i), z).real();
      row.b = c2qm::magnetic_field(args.kappa, row.x);
      rows.push_back(row);
    }
  }

  std::ostringstream out;
  if (args.format == "json") {
    nlohmann::ordered_json j;
    j["kappa"] = args.kappa;
    j["delta"] = args.delta;
    j["r"] = args.radius;
    j["n_theta"] = n_theta;
    j["n_phi"] = n_phi;
    j["points"] = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      nlohmann::ordered_json p;
      p["x"] = {row.x.x1, row.x.x2, row.x.x3};
      p["a"] = {row.a[0], row.a[1], row.a[2]};
      p["b"] = {row.b[0], row.b[1], row.b[2]};
      j["points"].push_back(p);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "x1,x2,x3,A1,A2,A3,B1,B2,B3\n";
    for (const Row& row : rows) {
      const double cols[9] = {row.x.x1, row.x.x2, row.x.x3, row.a[0], row.a[1],
                              row.a[2],  row.b[0], row.b[1], row.b[2]};
      for (int c = 0; c < 9; ++c) out << (c ? "," : "") << format_double(cols[c]);
      out << "\n";
    }
  }
  return write_output(out.str(), args.out_path);
}

// --- state ----------------------------------------------------------------

struct StateArgs {
  std::string phi_expr = "1";
  int kappa = 1;
  int delta = 1;
  std::vector<std::string> points;
  std::string format = "text";
  std::string out_path;
};

int run_state(const StateArgs& args) {
  c2qm::SymFunc phi;
  try {
    phi = c2qm::parse_phi(args.phi_expr);
  } catch (const c2qm::PhiParseError& e) {
    std::cerr << "c2qm: " << e.what() << "\n";
    return 2;
  }
  c2qm::MonopoleState state;
  try {
    state = c2qm::make_state(phi, args.kappa, args.delta);
  } catch (const std::exception& e) {
    std::cerr << "c2qm: " << e.what() << "\n";
    return 1;
  }

  std::vector<std::array<double, 4>> pts;
  if (args.points.empty()) {
    pts = {{1.0, kPi / 3, kPi / 5, 0.0},
           {1.5, 2 * kPi / 3, -kPi / 3, kPi / 2},
           {0.7, kPi / 2, kPi / 2, 2.0 * kPi}};
  } else {
    for (const std::string& text : args.points) {
      std::array<double, 4> p{};
      if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &p[0], &p[1], &p[2], &p[3]) != 4) {
        std::cerr << "c2qm: --point expects r,theta,phi,gamma, got '" << text << "'\n";
        return 2;
      }
      pts.push_back(p);
    }
  }

  const c2qm::SymFunc full = state.full();
  const int charge = c2qm::measure_charge(state);

  std::ostringstream out;
  if (args.format == "json") {
    nlohmann::ordered_json j;
    j["phi"] = args.phi_expr;
    j["kappa"] = args.kappa;
    j["delta"] = args.delta;
    j["measured_charge"] = charge;
    j["state"] = nlohmann::ordered_json::parse(c2qm::symfunc_to_json(full));
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : pts) {
      const c2qm::CPoint z = c2qm::euler_to_c2(c2qm::EulerCoords(p[0], p[1], p[2], p[3]));
      const std::complex<double> value = c2qm::eval(full, z);
      const std::complex<double> bare = c2qm::eval(state.phi, z);
      nlohmann::ordered_json rec;
      rec["euler"] = {p[0], p[1], p[2], p[3]};
      rec["z1"] = {z.z1.real(), z.z1.imag()};
      rec["z2"] = {z.z2.real(), z.z2.imag()};
      rec["value"] = {value.real(), value.imag()};
      rec["abs2"] = std::norm(value);
      rec["abs2_bare"] = std::norm(bare);
      j["points"].push_back(rec);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "state: phi = " << c2qm::to_string(state.phi) << ", kappa = " << args.kappa
        << ", delta = " << args.delta << "\n";
    out << "measured charge: " << charge << "\n";
    for (const auto& p : pts) {
      const c2qm::CPoint z = c2qm::euler_to_c2(c2qm::EulerCoords(p[0], p[1], p[2], p[3]));
      const std::complex<double> value = c2qm::eval(full, z);
      const std::complex<double> bare = c2qm::eval(state.phi, z);
      char line[256];
      std::snprintf(line, sizeof(line),
                    "  (r=%g, theta=%g, phi=%g, gamma=%g): Phi = %.12g%+.12gi  "
                    "|Phi|^2 = %.12g  (bare %.12g)\n",
                    p[0], p[1], p[2], p[3], value.real(), value.imag(), std::norm(value),
                    std::norm(bare));
      out << line;
    }
  }
  return write_output(out.str(), args.out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum mechanics on C^2: monopole states, gauge fields, identity checks"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--kappa-max", vargs.opts.kappa_max, "largest monopole number in the grid")
      ->check(CLI::NonNegativeNumber);
  int delta_value = 0;
  CLI::Option* delta_opt =
      verify->add_option("--delta", delta_value, "restrict the grid to one delta");
  verify->add_option("--seed", vargs.opts.seed, "master seed for every random draw");
  verify->add_option("--tol", vargs.opts.tol_sym, "symbolic-identity tolerance");
  verify->add_option("--tol-fd", vargs.opts.tol_fd, "finite-difference tolerance");
  verify->add_option("--tol-curl", vargs.opts.tol_curl, "FD-curl tolerance");
  verify->add_option("--flux-rtol", vargs.opts.flux_rtol, "relative flux tolerance");
  verify->add_option("--norm-sigmas", vargs.opts.norm_sigmas,
                     "Monte-Carlo agreement band, in standard errors");
  verify->add_option("--samples", vargs.opts.mc_samples, "Monte-Carlo sample count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--oracle-points", vargs.opts.oracle_points,
                     "points per randomized identity check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--fd-step", vargs.opts.fd_step, "first-derivative step");
  verify->add_option("--fd-step2", vargs.opts.fd_step_second, "second-derivative step");
  verify->add_option("--format", vargs.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vargs.out_path, "write the report to a file");

  FieldArgs fargs;
  CLI::App* field = app.add_subcommand("field", "sample A and B on a sphere");
  field->add_option("--kappa", fargs.kappa, "monopole number");
  field->add_option("--delta", fargs.delta, "string parameter");
  field->add_option("--r", fargs.radius, "sphere radius")->check(CLI::PositiveNumber);
  field->add_option("--grid", fargs.grid, "theta x phi grid, e.g. 8x16");
  field->add_option("--format", fargs.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  field->add_option("--out", fargs.out_path, "write the table to a file");

  StateArgs sargs;
  CLI::App* state = app.add_subcommand("state", "build and evaluate a monopole state");
  state->add_option("--phi", sargs.phi_expr, "scalar part, e.g. '2*x3 + r^2 - x1*x2*r^-1'");
  state->add_option("--kappa", sargs.kappa, "monopole number");
  state->add_option("--delta", sargs.delta, "string parameter");
  state->add_option("--point", sargs.points, "evaluation point r,theta,phi,gamma (repeatable)");
  state->add_option("--format", sargs.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  state->add_option("--out", sargs.out_path, "write the output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (*delta_opt) vargs.delta = delta_value;
      return run_verify(vargs);
    }
    if (field->parsed()) return run_field(fargs);
    if (state->parsed()) return run_state(sargs);
  } catch (const std::exception& e) {
    std::cerr << "c2qm: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
