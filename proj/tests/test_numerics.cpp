#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "c2qm/numerics.hpp"
#include "c2qm/symfunc.hpp"

using namespace c2qm;
using std::complex;

namespace {
constexpr double kPi = std::numbers::pi;
const complex<double> I{0.0, 1.0};
}  // namespace

TEST_CASE("config validation rejects out-of-range steps and counts") {
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.fd_step = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = QuadratureConfig{};
  cfg.fd_step_second = 1e-9;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = QuadratureConfig{};
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = QuadratureConfig{};
  cfg.r_max = cfg.r_min - 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("first derivatives: directional central differences") {
  auto f = [](const R3Point& x) {
    return complex<double>(std::exp(0.3 * x.x1) * std::cos(x.x2), x.x3 * x.x3);
  };
  const R3Point p{0.7, -0.4, 1.2};
  const complex<double> want_x1{0.3 * std::exp(0.3 * p.x1) * std::cos(p.x2), 0.0};
  const complex<double> want_x2{-std::exp(0.3 * p.x1) * std::sin(p.x2), 0.0};
  const complex<double> want_x3{0.0, 2.0 * p.x3};
  CHECK(std::abs(fd_partial(f, p, {1, 0, 0}, 1e-5) - want_x1) < 1e-8);
  CHECK(std::abs(fd_partial(f, p, {0, 1, 0}, 1e-5) - want_x2) < 1e-8);
  CHECK(std::abs(fd_partial(f, p, {0, 0, 1}, 1e-5) - want_x3) < 1e-8);
  // diagonal direction = sum of the components
  CHECK(std::abs(fd_partial(f, p, {1, 1, 0}, 1e-5) - (want_x1 + want_x2)) < 1e-8);
}

TEST_CASE("second derivatives: 3-point stencil") {
  auto f = [](const R3Point& x) { return complex<double>(std::sin(x.x1) * x.x2 * x.x2, 0.0); };
  const R3Point p{0.9, 1.1, 0.0};
  CHECK(std::abs(fd_second(f, p, 0, 3e-4) - complex<double>(-std::sin(p.x1) * p.x2 * p.x2, 0.0)) <
        1e-6);
  CHECK(std::abs(fd_second(f, p, 1, 3e-4) - complex<double>(2.0 * std::sin(p.x1), 0.0)) < 1e-6);
  CHECK(std::abs(fd_second(f, p, 2, 3e-4)) < 1e-6);
}

TEST_CASE("C^2 directional derivatives") {
  // f = |z1|^2 => d/d(Re z1) = 2 Re z1, d/d(Im z2) = 0.
  auto f = [](const CPoint& p) { return complex<double>(std::norm(p.z1), 0.0); };
  const CPoint p{{0.8, -0.3}, {0.2, 0.5}};
  CHECK(std::abs(fd_partial_c2(f, p, {1, 0, 0, 0}, 1e-5) - complex<double>(1.6, 0.0)) < 1e-8);
  CHECK(std::abs(fd_partial_c2(f, p, {0, 1, 0, 0}, 1e-5) - complex<double>(-0.6, 0.0)) < 1e-8);
  CHECK(std::abs(fd_partial_c2(f, p, {0, 0, 0, 1}, 1e-5)) < 1e-8);
}

TEST_CASE("spherical curl of a known field") {
  // A = r sin(theta) e_phi: rot A = 2 cos(theta) e_r - 2 sin(theta) e_theta.
  SphericalField a = [](double r, double theta, double) {
    return std::array<complex<double>, 3>{0.0, 0.0, r * std::sin(theta)};
  };
  const double r = 1.3, theta = 1.0, phi = 0.4;
  const auto curl = spherical_curl(a, r, theta, phi, 1e-5);
  CHECK(std::abs(curl[0] - 2.0 * std::cos(theta)) < 1e-7);
  CHECK(std::abs(curl[1] + 2.0 * std::sin(theta)) < 1e-7);
  CHECK(std::abs(curl[2]) < 1e-7);
}

TEST_CASE("spherical curl of a gradient vanishes") {
  // grad(r^2 cos(theta)) has components (2 r cos, -r sin, 0); its curl is 0.
  SphericalField grad = [](double r, double theta, double) {
    return std::array<complex<double>, 3>{2.0 * r * std::cos(theta), -r * std::sin(theta), 0.0};
  };
  const auto curl = spherical_curl(grad, 0.9, 0.8, -1.1, 1e-5);
  for (int c = 0; c < 3; ++c) CHECK(std::abs(curl[c]) < 1e-7);
}

TEST_CASE("spherical curl refuses the poles and the origin") {
  SphericalField a = [](double, double, double) {
    return std::array<complex<double>, 3>{0.0, 0.0, 1.0};
  };
  CHECK_THROWS_AS(spherical_curl(a, 1.0, 1e-7, 0.0, 1e-5), PoleError);
  CHECK_THROWS_AS(spherical_curl(a, 1.0, kPi - 1e-7, 0.0, 1e-5), PoleError);
  CHECK_THROWS_AS(spherical_curl(a, 1e-7, 1.0, 0.0, 1e-5), PoleError);
}

TEST_CASE("C^2 norm of exp(-r) is pi") {
  // int (2r/pi) e^{-2r} dz dzbar = int e^{-2r} d^3x = pi.
  auto f = [](const CPoint& p) { return complex<double>(std::exp(-p.radius()), 0.0); };
  QuadratureConfig cfg;
  const McEstimate est = mc_norm_c2(f, cfg);
  CHECK(est.std_error > 0.0);
  CHECK(est.std_error < 0.05);
  CHECK(std::abs(est.value - kPi) < 5.0 * est.std_error);
}

TEST_CASE("SymFunc norm with envelope: x3 e^{-r}") {
  // int x3^2 e^{-2r} d^3x = (4 pi / 3) int_0^inf r^4 e^{-2r} dr = pi.
  const Rational z(0), o(1);
  const SymFunc x3 =
      SymFunc::term(1.0, {z, o, o, z, z}) + SymFunc::term(-1.0, {z, z, z, o, o});
  QuadratureConfig cfg;
  cfg.sigma_c2 = 0.8;
  const McEstimate est = mc_norm_c2(x3, [](double r) { return std::exp(-r); }, cfg);
  CHECK(std::abs(est.value - kPi) < 5.0 * est.std_error);
}

TEST_CASE("R^3 norm of a gaussian") {
  auto g = [](const R3Point& x) {
    const double r2 = x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
    return complex<double>(std::exp(-0.5 * r2), 0.0);
  };
  QuadratureConfig cfg;
  const McEstimate est = mc_norm_r3(g, cfg);
  CHECK(std::abs(est.value - std::pow(kPi, 1.5)) < 5.0 * est.std_error);
}

TEST_CASE("monte carlo estimates are deterministic in the seed") {
  auto f = [](const CPoint& p) { return complex<double>(std::exp(-p.radius()), 0.0); };
  QuadratureConfig cfg;
  cfg.samples = 20000;
  const McEstimate a = mc_norm_c2(f, cfg);
  const McEstimate b = mc_norm_c2(f, cfg);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  cfg.seed = 43;
  const McEstimate c = mc_norm_c2(f, cfg);
  CHECK(a.value != c.value);  // different stream, same target
  CHECK(std::abs(a.value - c.value) < 5.0 * std::hypot(a.std_error, c.std_error));
}

TEST_CASE("radial cutoffs truncate the integrand") {
  auto f = [](const CPoint&) { return complex<double>(1.0, 0.0); };
  QuadratureConfig cfg;
  cfg.samples = 50000;
  cfg.r_max = 1.0;
  // int_{r<=1} (4r/pi) d^4u over the C^2 ball of squared radius 1:
  // equals int_{|x|<=1} d^3x = 4 pi / 3.
  const McEstimate est = mc_norm_c2(f, cfg);
  CHECK(std::abs(est.value - 4.0 * kPi / 3.0) < 5.0 * est.std_error);
}

TEST_CASE("divergent integrands are detected") {
  // |r^{-3}|^2 is far from integrable at the origin; the estimator must
  // refuse rather than return a number.
  const SymFunc f = SymFunc::r_power(Rational(-3));
  QuadratureConfig cfg;
  CHECK_THROWS_AS(mc_norm_c2(f, [](double) { return 1.0; }, cfg), DivergentIntegralError);
}

TEST_CASE("flux of a radial inverse-square field") {
  auto field = [](const R3Point& x) {
    const double r = x.norm();
    const double s = 1.0 / (r * r * r);
    return std::array<double, 3>{x.x1 * s, x.x2 * s, x.x3 * s};
  };
  CHECK(sphere_flux(field, 1.0) == doctest::Approx(4.0 * kPi).epsilon(1e-6));
  CHECK(sphere_flux(field, 2.5) == doctest::Approx(4.0 * kPi).epsilon(1e-6));
  // A constant field has zero net flux.
  auto constant = [](const R3Point&) { return std::array<double, 3>{0.3, -1.0, 2.0}; };
  CHECK(std::abs(sphere_flux(constant, 1.7)) < 1e-9);
}

TEST_CASE("kahan summation holds up against naive accumulation") {
  KahanSum acc;
  const double tiny = 1e-16;
  acc.add(1.0);
  for (int k = 0; k < 100000; ++k) acc.add(tiny);
  CHECK(acc.value() == doctest::Approx(1.0 + 1e-11).epsilon(1e-14));
}
