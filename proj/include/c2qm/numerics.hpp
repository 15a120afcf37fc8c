#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "c2qm/coords.hpp"
#include "c2qm/symfunc.hpp"

namespace c2qm {

/// Thrown when a finite-difference stencil would straddle a coordinate pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a Monte-Carlo estimate shows runaway variance or non-finite
/// samples (divergent integrand).
class DivergentIntegralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Knobs shared by the quadrature and finite-difference routines. Steps are
/// validated into [1e-7, 1e-3]; sample counts must be positive.
struct QuadratureConfig {
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  double r_min = 0.0;    // radial cutoffs applied to the C^2 / R^3 radius
  double r_max = 50.0;
  double fd_step = 1e-5;         // first-derivative stencils
  double fd_step_second = 3e-4;  // second-derivative stencils
  double sigma_c2 = 0.6;         // Gaussian envelope scale of the C^2 sampler
  double sigma_r3 = 1.0;         // Gaussian envelope scale of the R^3 sampler

  void validate() const;
};

/// Central-difference directional derivative of a real-point function.
std::complex<double> fd_partial(const std::function<std::complex<double>(const R3Point&)>& f,
                                const R3Point& p, const std::array<double, 3>& dir, double h);

/// Central-difference derivative along a real 4-direction of a C^2 function
/// (directions indexed Re z1, Im z1, Re z2, Im z2).
std::complex<double> fd_partial_c2(const std::function<std::complex<double>(const CPoint&)>& f,
                                   const CPoint& p, const std::array<double, 4>& dir, double h);

/// Second derivative along a coordinate axis (central 3-point stencil).
std::complex<double> fd_second(const std::function<std::complex<double>(const R3Point&)>& f,
                               const R3Point& p, int axis, double h);

/// Physical spherical components of a vector field evaluated on the chart
/// (r, theta, phi).
using SphericalField = std::function<std::array<std::complex<double>, 3>(double r, double theta,
                                                                          double phi)>;

/// curl in physical spherical components by central differences. Throws
/// PoleError when theta is within 10h of a pole or r within 10h of 0.
std::array<std::complex<double>, 3> spherical_curl(const SphericalField& a, double r, double theta,
                                                   double phi, double h);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Monte-Carlo estimate of the weighted C^2 norm
///   ||f||^2 = int (2r/pi) |f|^2 dz dzbar,   dz dzbar = 2 d^4u (Lebesgue),
/// the normalization under which a function of x alone integrates exactly as
/// over R^3 with d^3x. Sampling is Gaussian importance sampling with radial
/// envelope exp(-rho^2 / (2 sigma_c2^2)); the radial cutoffs truncate the
/// integrand. Deterministic for a fixed (seed, samples).
McEstimate mc_norm_c2(const std::function<std::complex<double>(const CPoint&)>& f,
                      const QuadratureConfig& cfg);

/// SymFunc flavour with a numeric radial envelope applied to the integrand
/// (the algebra has no exponentials, so decay must be supplied here).
McEstimate mc_norm_c2(const SymFunc& f, const std::function<double(double r)>& envelope,
                      const QuadratureConfig& cfg);

/// Monte-Carlo estimate of int |g|^2 d^3x with Gaussian importance sampling.
McEstimate mc_norm_r3(const std::function<std::complex<double>(const R3Point&)>& g,
                      const QuadratureConfig& cfg);

/// Midpoint quadrature of the outward flux of `field` through the sphere of
/// the given radius.
double sphere_flux(const std::function<std::array<double, 3>(const R3Point&)>& field,
                   double radius, int n_theta = 256, int n_phi = 256);

/// Compensated (Kahan) accumulator; keeps long reductions order-stable.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace c2qm
