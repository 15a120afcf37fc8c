#include "c2qm/coords.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace c2qm {

namespace {

constexpr double kPeriod = 4.0 * std::numbers::pi;

double reduce_mod_period(double a) {
  double v = std::fmod(a, kPeriod);
  if (v < 0.0) v += kPeriod;
  return v;
}

}  // namespace

double R3Point::norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

EulerCoords::EulerCoords(double r_, double theta_, double phi_, double gamma_)
    : r(r_), theta(theta_), phi(reduce_mod_period(phi_)), gamma(reduce_mod_period(gamma_)) {
  if (!(r > 0.0)) throw std::invalid_argument("EulerCoords: r must be positive");
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::invalid_argument("EulerCoords: theta must lie in [0, pi]");
}

CPoint euler_to_c2(const EulerCoords& e) {
  const double rho = std::sqrt(e.r);
  const double c = std::cos(0.5 * e.theta);
  const double s = std::sin(0.5 * e.theta);
  const double a = 0.5 * (-e.phi + e.gamma);
  const double b = 0.5 * (e.phi + e.gamma);
  return CPoint{rho * c * std::polar(1.0, a), rho * s * std::polar(1.0, b)};
}

EulerDecomposition c2_to_euler(const CPoint& p) {
  const double m1 = std::abs(p.z1);
  const double m2 = std::abs(p.z2);
  const double r = m1 * m1 + m2 * m2;
  if (r == 0.0) throw std::invalid_argument("c2_to_euler: the origin is excluded");
  const double theta = 2.0 * std::atan2(m2, m1);
  // arg z1 = (gamma - phi)/2, arg z2 = (gamma + phi)/2. On a pole one of the
  // two phases carries no information; its canonical value is 0.
  bool pole = false;
  double a = 0.0, b = 0.0;
  if (m1 == 0.0 || m2 == 0.0) {
    pole = true;
    if (m1 != 0.0) a = std::arg(p.z1);
    if (m2 != 0.0) b = std::arg(p.z2);
  } else {
    a = std::arg(p.z1);
    b = std::arg(p.z2);
  }
  const double gamma = a + b;
  const double phi = b - a;
  return EulerDecomposition{EulerCoords(r, theta, phi, gamma), pole};
}

R3Point hopf_map(const CPoint& p) {
  if (p.radius() == 0.0) throw std::invalid_argument("hopf_map: the origin is excluded");
  const std::complex<double> cross = std::conj(p.z1) * p.z2;
  return R3Point{2.0 * cross.real(), 2.0 * cross.imag(), std::norm(p.z1) - std::norm(p.z2)};
}

SphPoint to_spherical(const R3Point& x) {
  const double r = x.norm();
  if (r == 0.0) throw std::invalid_argument("to_spherical: the origin is excluded");
  return SphPoint{r, std::acos(std::clamp(x.x3 / r, -1.0, 1.0)), std::atan2(x.x2, x.x1)};
}

R3Point from_spherical(const SphPoint& s) {
  return R3Point{s.r * std::sin(s.theta) * std::cos(s.phi),
                 s.r * std::sin(s.theta) * std::sin(s.phi), s.r * std::cos(s.theta)};
}

}  // namespace c2qm
