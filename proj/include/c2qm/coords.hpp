#pragma once

#include <complex>

namespace c2qm {

/// Conventions used throughout the library:
///  - hbar = m = 1.
///  - The configuration space is C^2 with the origin removed; r denotes the
///    squared C^2 magnitude |z1|^2 + |z2|^2 and doubles as the R^3 radius
///    under the Hopf map.
///  - All complex arguments and fractional powers use the principal branch,
///    arg in (-pi, pi].
///  - The angles phi and gamma live on a 4*pi period; theta in [0, pi].

/// A point of C^2 \ {0}.
struct CPoint {
  std::complex<double> z1;
  std::complex<double> z2;

  /// r = |z1|^2 + |z2|^2 (equals the R^3 radius of the Hopf image).
  double radius() const { return std::norm(z1) + std::norm(z2); }
};

/// A point (or vector) of R^3.
struct R3Point {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  double norm() const;
};

/// Euler-angle chart on C^2: z1 = sqrt(r) cos(theta/2) e^{i(-phi+gamma)/2},
/// z2 = sqrt(r) sin(theta/2) e^{i(phi+gamma)/2}. phi and gamma are reduced
/// modulo 4*pi into [0, 4*pi) at construction; theta must lie in [0, pi] and
/// r must be positive.
struct EulerCoords {
  EulerCoords(double r, double theta, double phi, double gamma);

  double r;
  double theta;
  double phi;
  double gamma;
};

/// Result of decomposing a C^2 point into Euler coordinates. On the poles
/// (z1 == 0 or z2 == 0 exactly) one combination of phi and gamma is
/// undetermined; the canonical representative sets it to zero and
/// `pole_canonicalized` is flagged.
struct EulerDecomposition {
  EulerCoords coords;
  bool pole_canonicalized;
};

CPoint euler_to_c2(const EulerCoords& e);

/// Inverse chart. Throws std::invalid_argument at the origin.
EulerDecomposition c2_to_euler(const CPoint& p);

/// Hopf map x^i = zbar sigma^i z. The image satisfies |x| = r exactly
/// (in exact arithmetic); gamma is the fiber coordinate and drops out.
/// Throws std::invalid_argument at the origin.
R3Point hopf_map(const CPoint& p);

/// Spherical coordinates of a nonzero R^3 point: radius r, polar theta,
/// azimuth phi (principal branch).
struct SphPoint {
  double r;
  double theta;
  double phi;
};

SphPoint to_spherical(const R3Point& x);
R3Point from_spherical(const SphPoint& s);

}  // namespace c2qm
