#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "c2qm/coords.hpp"
#include "c2qm/monopole.hpp"
#include "c2qm/numerics.hpp"
#include "c2qm/operators.hpp"
#include "c2qm/oracle.hpp"

using namespace c2qm;
using std::complex;

namespace {

constexpr double kPi = std::numbers::pi;
const complex<double> I{0.0, 1.0};

// The sector factor on the Euler chart, with NO angle reduction: the
// continuous continuation xi(r, theta, phi, gamma) = e^{i (kappa gamma +
// delta phi) / 2}. This is the reference the algebraic factor must reproduce
// wherever the principal branches agree, and the object whose 4 pi shifts
// probe single-valuedness.
complex<double> xi_chart(int kappa, int delta, double phi, double gamma) {
  return std::exp(I * 0.5 * (kappa * gamma + delta * phi));
}

// Same continuation for one monomial z1^p1 z1*^q1 z2^p2 z2*^q2 r^s: moduli
// from the chart, the phase from the unreduced angles.
complex<double> term_chart(const ExpTuple& e, double r, double theta, double phi,
                           double gamma) {
  const double m1 = std::sqrt(r) * std::cos(theta / 2);
  const double m2 = std::sqrt(r) * std::sin(theta / 2);
  const double a1 = (gamma - phi) / 2;  // arg z1 along the continuation
  const double a2 = (gamma + phi) / 2;
  const double mod = std::pow(r, e.s.as_double()) *
                     std::pow(m1, (e.p1 + e.q1).as_double()) *
                     std::pow(m2, (e.p2 + e.q2).as_double());
  const double phase = (e.p1 - e.q1).as_double() * a1 + (e.p2 - e.q2).as_double() * a2;
  return mod * std::exp(I * phase);
}

}  // namespace

TEST_CASE("xi_factor carries the advertised exponents and unit modulus") {
  for (int kappa = -3; kappa <= 3; ++kappa)
    for (int delta = -kappa; delta <= kappa; ++delta) {
      const SymFunc xi = xi_factor(kappa, delta);
      REQUIRE(xi.size() == 1);
      const ExpTuple& e = xi.terms()[0].e;
      CHECK(e.p1 == Rational(kappa - delta, 4));
      CHECK(e.q1 == -Rational(kappa - delta, 4));
      CHECK(e.p2 == Rational(kappa + delta, 4));
      CHECK(e.q2 == -Rational(kappa + delta, 4));
      CHECK(e.s.is_zero());
      CPointSampler sampler(401 + kappa * 10 + delta);
      for (int k = 0; k < 20; ++k) {
        const CPoint p = sampler.next();
        CHECK(std::abs(eval(xi, p)) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
}

TEST_CASE("xi_factor matches the euler-chart phase where branches agree") {
  std::mt19937_64 eng(402);
  auto u = [&](double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  };
  for (int kappa = 0; kappa <= 3; ++kappa)
    for (int delta = -kappa; delta <= kappa; ++delta) {
      const SymFunc xi = xi_factor(kappa, delta);
      for (int k = 0; k < 25; ++k) {
        // keep (gamma -+ phi)/2 inside (-pi, pi) so principal branches agree
        const double phi = u(-1.5, 1.5), gamma = u(-1.5, 1.5);
        const EulerCoords e(u(0.3, 2.0), u(0.05, kPi - 0.05), phi, gamma);
        const complex<double> got = eval(xi, euler_to_c2(e));
        const complex<double> want = xi_chart(kappa, delta, phi, gamma);
        CHECK(std::abs(got - want) < 1e-10);
      }
    }
}

TEST_CASE("integer kappa states are single-valued under gamma -> gamma + 4 pi") {
  std::mt19937_64 eng(403);
  auto u = [&](double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  };
  for (int kappa = 0; kappa <= 4; ++kappa)
    for (int delta = -kappa; delta <= kappa; ++delta) {
      const ExpTuple e = xi_factor(kappa, delta).terms()[0].e;
      for (int k = 0; k < 10; ++k) {
        const double r = u(0.5, 2.0), theta = u(0.2, kPi - 0.2);
        const double phi = u(-6.0, 6.0), gamma = u(-6.0, 6.0);
        const complex<double> base = term_chart(e, r, theta, phi, gamma);
        // gamma + 4 pi and phi + 4 pi are the same C^2 point; the
        // continuation must return to the same value.
        CHECK(std::abs(term_chart(e, r, theta, phi, gamma + 4 * kPi) - base) < 1e-9);
        CHECK(std::abs(term_chart(e, r, theta, phi + 4 * kPi, gamma) - base) < 1e-9);
        // gamma + 2 pi is a DIFFERENT C^2 point (z -> -z); for odd kappa the
        // factor is antiperiodic there, which is the half-charge hallmark.
        const complex<double> half = term_chart(e, r, theta, phi, gamma + 2 * kPi);
        const complex<double> want = (kappa % 2 == 0 ? base : -base);
        CHECK(std::abs(half - want) < 1e-9);
      }
    }
}

TEST_CASE("a quarter-odd tuple built behind the factory is NOT single-valued") {
  // kappa would be 1/2: legal term arithmetic, but the continuation picks up
  // e^{i pi} after one full gamma period. This is exactly what xi_factor's
  // integer signature rules out.
  const ExpTuple bad{Rational(0), Rational(1, 4), Rational(-1, 4), Rational(0), Rational(0)};
  CHECK_NOTHROW(SymFunc::term(1.0, bad));
  const complex<double> base = term_chart(bad, 1.0, 1.2, 0.3, 0.4);
  const complex<double> shifted = term_chart(bad, 1.0, 1.2, 0.3, 0.4 + 4 * kPi);
  CHECK(std::abs(shifted + base) < 1e-12);  // antiperiodic: picked up -1
}

TEST_CASE("seam behavior sorts sectors by the parity of kappa + delta") {
  // Walk z2 across the negative real axis. The winding p2 - q2 = (kappa +
  // delta)/2 decides continuity of the principal-branch representation:
  // integer winding glues, half-odd winding picks up the deck factor -1.
  // The -1 is exactly the sign a kappa + delta odd sector acquires between
  // the two Euler representatives (phi, gamma) and (phi + 2pi, gamma + 2pi)
  // of one C^2 point.
  const double eps = 1e-9;
  const CPoint above{{0.8, 0.0}, {-0.9, 0.9 * eps}};
  const CPoint below{{0.8, 0.0}, {-0.9, -0.9 * eps}};
  auto jump = [&](const SymFunc& f) { return eval(f, above) / eval(f, below); };
  CHECK(std::abs(jump(xi_factor(1, 1)) - 1.0) < 1e-6);   // winding 1: continuous
  CHECK(std::abs(jump(xi_factor(2, 0)) - 1.0) < 1e-6);   // winding 1: continuous
  CHECK(std::abs(jump(xi_factor(1, 0)) + 1.0) < 1e-6);   // winding 1/2: sign flip
  CHECK(std::abs(jump(xi_factor(2, 1)) + 1.0) < 1e-6);   // winding 3/2: sign flip
  const SymFunc x1 = hopf_coordinate(Axis::x1);
  CHECK(std::abs(eval(x1, above) - eval(x1, below)) < 1e-6);
}

TEST_CASE("make_state validates its inputs") {
  CHECK_NOTHROW(make_state(hopf_coordinate(Axis::x3), 2, 0));
  CHECK_NOTHROW(make_state(SymFunc::one() + SymFunc::r_power(Rational(-1)), 1, -1));
  // z1 alone does not descend to R^3
  CHECK_THROWS_AS(make_state(SymFunc::variable(Var::z1), 1, 1), std::invalid_argument);
  const MonopoleState st = make_state(hopf_coordinate(Axis::x1), 3, 1);
  CHECK(st.kappa == 3);
  CHECK(st.delta == 1);
  CHECK(st.mu == Rational(3, 2));
  CHECK((st.xi - xi_factor(3, 1)).is_zero());
}

TEST_CASE("measure_charge reads kappa off the state and audits consistency") {
  const SymFunc phis[] = {SymFunc::one(), hopf_coordinate(Axis::x3),
                          SymFunc::r_power(Rational(2)) + hopf_coordinate(Axis::x1)};
  for (int kappa : {-2, 0, 1, 3})
    for (const SymFunc& phi : phis) {
      const int delta = kappa > 0 ? kappa - 1 : 0;
      const MonopoleState st = make_state(phi, kappa, delta);
      CHECK(measure_charge(st) == kappa);
    }
  // A deliberately inconsistent state (built around the factory) must be
  // rejected, not silently measured.
  MonopoleState lie;
  lie.phi = SymFunc::one();
  lie.kappa = 3;
  lie.delta = 0;
  lie.xi = xi_factor(2, 0);
  lie.mu = Rational(3, 2);
  CHECK_THROWS_AS(measure_charge(lie), ChargeMeasurementError);
}

TEST_CASE("angular shift residuals vanish on consistent states") {
  for (int kappa : {0, 1, 2})
    for (int delta = -kappa; delta <= kappa; ++delta) {
      const MonopoleState st = make_state(hopf_coordinate(Axis::x3), kappa, delta);
      const auto res = angular_shift_residual(st);
      for (int i = 0; i < 3; ++i)
        CHECK(approx_equal(res[i], SymFunc::zero(), 1e-9, 20, 410 + 9 * kappa + 3 * delta + i)
                  .ok);
    }
}

TEST_CASE("gauge potential: closed azimuthal profile") {
  std::mt19937_64 eng(420);
  auto u = [&](double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  };
  for (int kappa : {0, 1, 2, 3})
    for (int delta = -kappa; delta <= kappa; ++delta) {
      const GaugePotential pot = gauge_potential(kappa, delta);
      CHECK(pot.kappa() == kappa);
      CHECK(pot.delta() == delta);
      for (int k = 0; k < 20; ++k) {
        const double r = u(0.4, 2.5), theta = u(0.15, kPi - 0.15), phi = u(-kPi, kPi);
        const SphericalComponents c = pot.spherical_at(r, theta, phi);
        const double want = (delta + kappa * std::cos(theta)) / (2.0 * r * std::sin(theta));
        CHECK(std::abs(c.a_phi - want) < 1e-9 * (1.0 + std::abs(want)));
        CHECK(std::abs(c.a_r) < 1e-9);
        CHECK(std::abs(c.a_theta) < 1e-9);
        CHECK(pot.a_phi_closed(r, theta) == doctest::Approx(want).epsilon(1e-12));
        CHECK(pot.a_phi_kappa_part(r, theta) + pot.a_phi_delta_part(r, theta) ==
              doctest::Approx(want).epsilon(1e-11));
        CHECK(a_phi_closed_form(kappa, delta, r, theta) ==
              doctest::Approx(want).epsilon(1e-12));
      }
    }
  CHECK_THROWS_AS(a_phi_closed_form(1, 1, 1.0, 0.0), PoleError);
  CHECK_THROWS_AS(a_phi_closed_form(1, 1, 1.0, kPi), PoleError);
}

TEST_CASE("the potential is gamma-independent") {
  const GaugePotential pot = gauge_potential(2, 1);
  std::mt19937_64 eng(421);
  auto u = [&](double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  };
  for (int k = 0; k < 20; ++k) {
    const double r = u(0.4, 2.0), theta = u(0.2, kPi - 0.2), phi = u(-1.0, 1.0);
    for (Axis i : kAxes) {
      const complex<double> at0 =
          eval(pot.cartesian(i), euler_to_c2(EulerCoords(r, theta, phi, 0.0)));
      const complex<double> at1 =
          eval(pot.cartesian(i), euler_to_c2(EulerCoords(r, theta, phi, 1.3)));
      CHECK(std::abs(at0 - at1) < 1e-10);
    }
  }
}

TEST_CASE("magnetic field and flux quantization") {
  std::mt19937_64 eng(422);
  auto u = [&](double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  };
  for (int kappa : {-1, 0, 1, 2, 3}) {
    for (int k = 0; k < 10; ++k) {
      const R3Point x{u(-2, 2), u(-2, 2), u(-2, 2)};
      if (x.norm() < 0.2) continue;
      const auto b = magnetic_field(kappa, x);
      const double r = x.norm();
      const double want = -0.5 * kappa / (r * r * r);
      CHECK(b[0] == doctest::Approx(want * x.x1).epsilon(1e-12));
      CHECK(b[1] == doctest::Approx(want * x.x2).epsilon(1e-12));
      CHECK(b[2] == doctest::Approx(want * x.x3).epsilon(1e-12));
    }
    const double flux = sphere_flux(
        [kappa](const R3Point& x) { return magnetic_field(kappa, x); }, 1.4, 200, 200);
    CHECK(flux == doctest::Approx(-2.0 * kPi * kappa).epsilon(1e-6));
  }
}

TEST_CASE("curl of the potential reproduces the field for every delta") {
  std::mt19937_64 eng(423);
  auto u = [&](double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  };
  QuadratureConfig cfg;
  for (int kappa : {0, 1, 2})
    for (int delta = -kappa; delta <= kappa; ++delta) {
      std::vector<SphPoint> pts;
      for (int k = 0; k < 25; ++k)
        pts.push_back(SphPoint{u(0.4, 2.5), u(0.2, kPi - 0.2), u(-kPi, kPi)});
      CHECK(curl_check(kappa, delta, pts, cfg) < 1e-4);
    }
}

TEST_CASE("extract_potential recovers the sector labels from the factor") {
  const GaugePotential pot = extract_potential(xi_factor(3, -1));
  CHECK(pot.kappa() == 3);
  CHECK(pot.delta() == -1);
  CHECK_THROWS_AS(extract_potential(hopf_coordinate(Axis::x1) + SymFunc::one()),
                  std::invalid_argument);
}

TEST_CASE("dirac strings sit where the closed form diverges") {
  struct Case {
    int kappa, delta;
    bool north, south;
  };
  const Case cases[] = {
      {0, 0, false, false},  // free sector: no string at all
      {1, 1, true, false},   // A_phi = (1 + cos)/(2 r sin): south term cancels
      {1, -1, false, true},
      {2, 2, true, false},
      {2, -2, false, true},
      {2, 0, true, true},  // symmetric gauge: both poles
      {3, 1, true, true},
      {-2, 0, true, true},
  };
  for (const Case& c : cases) {
    const StringClassification got = string_singularities(c.kappa, c.delta);
    CHECK(got.north == c.north);
    CHECK(got.south == c.south);
  }
}

TEST_CASE("imaginary gauge: factorization and potentials") {
  for (int kappa : {0, 1, 2, 3}) {
    const ImaginaryGaugeResult ig = imaginary_gauge(kappa);
    CHECK(ig.kappa == kappa);
    // exact term-level factorization xi = xi_radial * xi_fiber
    CHECK((ig.xi - ig.xi_radial * ig.xi_fiber).is_zero());
    CHECK((ig.gauged_factor - ig.xi_fiber).is_zero());
    CHECK((ig.xi_fiber - xi_factor(kappa, 0)).is_zero());
    // xi_radial is real positive: (r sin theta / 2)^{kappa/2}
    std::mt19937_64 eng(430 + kappa);
    auto u = [&](double a, double b) {
      return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
    };
    for (int k = 0; k < 15; ++k) {
      const double r = u(0.4, 2.0), theta = u(0.3, kPi - 0.3), phi = u(-1.0, 1.0),
                   gamma = u(-1.0, 1.0);
      const CPoint p = euler_to_c2(EulerCoords(r, theta, phi, gamma));
      const complex<double> rad = eval(ig.xi_radial, p);
      CHECK(std::abs(rad.imag()) < 1e-12);
      CHECK(rad.real() ==
            doctest::Approx(std::pow(0.5 * r * std::sin(theta), 0.5 * kappa)).epsilon(1e-10));
      // Im A = -(kappa/2) (x1, x2, 0) / (x1^2 + x2^2), the gradient of
      // -log xi_radial.
      const R3Point x = hopf_map(p);
      const double rho2 = x.x1 * x.x1 + x.x2 * x.x2;
      const double want[3] = {-0.5 * kappa * x.x1 / rho2, -0.5 * kappa * x.x2 / rho2, 0.0};
      for (int j = 0; j < 3; ++j)
        CHECK(std::abs(eval(ig.im_a[j], p) - want[j]) < 1e-9 * (1.0 + std::abs(want[j])));
    }
    // Re A carries the field of the delta = 0 sector.
    const GaugePotential phase_pot = gauge_potential(kappa, 0);
    std::mt19937_64 eng2(440 + kappa);
    auto u2 = [&](double a, double b) {
      return a + (b - a) * (static_cast<double>(eng2() >> 11) * 0x1.0p-53);
    };
    for (int k = 0; k < 10; ++k) {
      const double r = u2(0.4, 2.0), theta = u2(0.3, kPi - 0.3), phi = u2(-kPi, kPi);
      const SphericalComponents got = ig.potential.spherical_at(r, theta, phi);
      const SphericalComponents want = phase_pot.spherical_at(r, theta, phi);
      CHECK(std::abs(got.a_phi.real() - want.a_phi.real()) < 1e-9);
      CHECK(std::abs(got.a_r.real() - want.a_r.real()) < 1e-9);
      CHECK(std::abs(got.a_theta.real() - want.a_theta.real()) < 1e-9);
    }
  }
}

TEST_CASE("norm preservation: the dressed state has the bare norm") {
  QuadratureConfig ca;
  ca.samples = 60000;
  QuadratureConfig cb = ca;
  cb.seed = 1042;  // independent stream: agreement is statistical, not forced
  const auto envelope = [](double r) { return std::exp(-r); };
  const McEstimate dressed = mc_norm_c2(xi_factor(2, 0), envelope, ca);
  const McEstimate bare = mc_norm_c2(SymFunc::one(), envelope, cb);
  CHECK(std::abs(dressed.value - bare.value) <
        4.0 * std::hypot(dressed.std_error, bare.std_error));
  // and both sit on the analytic value pi
  CHECK(std::abs(dressed.value - kPi) < 5.0 * dressed.std_error);
}
