#pragma once

#include <array>
#include <vector>

#include "c2qm/numerics.hpp"
#include "c2qm/operators.hpp"
#include "c2qm/oracle.hpp"
#include "c2qm/symfunc.hpp"

namespace c2qm {

/// Thrown by measure_charge when the fiber-momentum eigenvalue of a state
/// disagrees with its recorded kappa.
class ChargeMeasurementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generalized state Phi_kappa = phi(x) * xi, where phi is restricted
/// (descends to R^3) and xi = (z1/z1*)^{(kappa-delta)/4} (z2/z2*)^{(kappa+delta)/4}
/// is the unit-modulus sector factor, xi = e^{i kappa gamma / 2} e^{i delta phi / 2}
/// on the Euler chart. mu = kappa/2 is the magnetic charge. Build through
/// make_state, which enforces the invariants; the bare struct exists so tests
/// can probe deliberately inconsistent states.
struct MonopoleState {
  SymFunc phi;
  int kappa = 0;
  int delta = 0;
  SymFunc xi;
  Rational mu;

  SymFunc full() const { return phi * xi; }
};

/// The sector factor xi_{kappa,delta} as a single term. kappa and delta are
/// arbitrary integers (negative charge admitted).
SymFunc xi_factor(int kappa, int delta);

/// Validates that phi is restricted and that xi has unit modulus on a fixed
/// set of sample points, then assembles the state.
MonopoleState make_state(const SymFunc& phi, int kappa, int delta);

/// Residuals eps_ijk x_j V_k Phi - L_i Phi - (kappa/2)(x_i/r) Phi for the
/// three axes; all must vanish on a consistent state.
std::array<SymFunc, 3> angular_shift_residual(const MonopoleState& state);

/// Spherical physical components at a point.
struct SphericalComponents {
  std::complex<double> a_r;
  std::complex<double> a_theta;
  std::complex<double> a_phi;
};

/// Gauge potential of a sector: A_j = (velocity_j xi) / xi, a function with
/// integer exponents away from the strings. For the unit-modulus factors the
/// components are real with A_r = A_theta = 0 and
/// A_phi = (delta + kappa cos(theta)) / (2 r sin(theta)).
class GaugePotential {
 public:
  GaugePotential(std::array<SymFunc, 3> cartesian, int kappa, int delta);

  const SymFunc& cartesian(Axis i) const { return cart_[static_cast<int>(i)]; }
  int kappa() const { return kappa_; }
  int delta() const { return delta_; }

  /// Evaluate the Cartesian components at the Euler point (r, theta, phi)
  /// (gamma drops out) and project onto the spherical frame.
  SphericalComponents spherical_at(double r, double theta, double phi) const;

  /// Closed forms of the azimuthal profile and its kappa/delta split:
  /// a_phi = a_phi_kappa_part + a_phi_delta_part. Throw PoleError on the axis.
  double a_phi_closed(double r, double theta) const;
  double a_phi_kappa_part(double r, double theta) const;  // (kappa/2r) cot(theta)
  double a_phi_delta_part(double r, double theta) const;  // (delta/2r) csc(theta)

 private:
  std::array<SymFunc, 3> cart_;
  int kappa_;
  int delta_;
};

/// Potential of the phase sector (kappa, delta).
GaugePotential gauge_potential(int kappa, int delta);

/// Potential extracted from an arbitrary single-term gauge factor (used for
/// non-unit-modulus factors, whose potentials acquire imaginary parts).
GaugePotential extract_potential(const SymFunc& xi);

/// Free-standing closed form (delta + kappa cos(theta)) / (2 r sin(theta)).
/// Throws PoleError at theta in {0, pi}.
double a_phi_closed_form(int kappa, int delta, double r, double theta);

/// B = -(kappa/2) x / |x|^3; depends on kappa only. The flux through any
/// sphere is -2 pi kappa.
std::array<double, 3> magnetic_field(int kappa, const R3Point& x);

/// One exported field sample: B x x = 0 (radial field).
struct FieldSample {
  R3Point point;
  std::array<double, 3> a;
  std::array<double, 3> b;
};

/// Max deviation of the FD spherical curl of the sector potential from the
/// closed-form field over the given points: relative to |B| for kappa != 0,
/// absolute for kappa == 0 (B vanishes identically).
double curl_check(int kappa, int delta, const std::vector<SphPoint>& points,
                  const QuadratureConfig& cfg);

/// Dirac string diagnostic: which poles of the unit sphere carry a divergent
/// |A_phi| (threshold 1e6 on a theta -> 0+, pi- scan at r = 1).
struct StringClassification {
  bool north = false;  // theta = 0
  bool south = false;  // theta = pi
};

StringClassification string_singularities(int kappa, int delta);

/// Verifies r * V4 Phi = (i kappa / 2) Phi with the randomized oracle and
/// returns kappa. Throws ChargeMeasurementError on mismatch.
int measure_charge(const MonopoleState& state, double tol = kDefaultSymTol,
                   std::uint64_t seed = kDefaultSeed);

/// Imaginary gauging of the non-phase factor xi = (z1 z2)^{kappa/2}:
/// xi factorizes as xi_radial * xi_fiber with xi_radial = |z1 z2|^{kappa/2}
/// = (r sin(theta) / 2)^{kappa/2} real and xi_fiber = xi_factor(kappa, 0).
/// The extracted potential has Im A_j = -d_{x_j} log(xi_radial) while Re A
/// carries the same field as the delta = 0 phase sector. The gauge transform
/// e^{-log xi_radial} maps phi * xi to phi * xi_fiber exactly.
struct ImaginaryGaugeResult {
  int kappa = 0;
  SymFunc xi;         // (z1 z2)^{kappa/2}
  SymFunc xi_radial;  // (z1 z1* z2 z2*)^{kappa/4}
  SymFunc xi_fiber;   // xi_factor(kappa, 0)
  GaugePotential potential;
  std::array<SymFunc, 3> im_a;  // formal imaginary parts of the components
  SymFunc gauged_factor;        // xi * xi_radial^{-1}; equals xi_fiber
};

ImaginaryGaugeResult imaginary_gauge(int kappa);

}  // namespace c2qm
