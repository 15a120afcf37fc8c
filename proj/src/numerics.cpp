#include "c2qm/numerics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace c2qm {

namespace {

constexpr double kPi = std::numbers::pi;

// Deterministic uniform/normal deviates from raw engine output (the standard
// distributions are implementation-defined).
double uniform01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

// Box-Muller; returns one deviate per call, caching the partner.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : eng_(seed) {}
  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = uniform01(eng_);
    while (u1 <= 0.0) u1 = uniform01(eng_);
    const double u2 = uniform01(eng_);
    const double m = std::sqrt(-2.0 * std::log(u1));
    spare_ = m * std::sin(2.0 * kPi * u2);
    have_ = true;
    return m * std::cos(2.0 * kPi * u2);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_ = false;
};

McEstimate reduce_importance_samples(const std::function<double(NormalSource&)>& one_sample,
                                     std::int64_t n, std::uint64_t seed) {
  NormalSource src(seed);
  KahanSum sum, sumsq;
  for (std::int64_t k = 0; k < n; ++k) {
    const double w = one_sample(src);
    if (!std::isfinite(w)) throw DivergentIntegralError("mc_norm: non-finite sample");
    sum.add(w);
    sumsq.add(w * w);
  }
  const double mean = sum.value() / static_cast<double>(n);
  const double var =
      std::max(0.0, sumsq.value() / static_cast<double>(n) - mean * mean) / static_cast<double>(n);
  McEstimate est{mean, std::sqrt(var)};
  if (n >= 1000 && est.std_error > 0.5 * std::abs(est.value) && est.std_error > 1e-12)
    throw DivergentIntegralError("mc_norm: runaway variance (divergent integrand)");
  return est;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (samples <= 0) throw std::invalid_argument("QuadratureConfig: samples must be positive");
  if (!(fd_step >= 1e-7 && fd_step <= 1e-3))
    throw std::invalid_argument("QuadratureConfig: fd_step must lie in [1e-7, 1e-3]");
  if (!(fd_step_second >= 1e-7 && fd_step_second <= 1e-3))
    throw std::invalid_argument("QuadratureConfig: fd_step_second must lie in [1e-7, 1e-3]");
  if (!(r_min >= 0.0 && r_max > r_min))
    throw std::invalid_argument("QuadratureConfig: need 0 <= r_min < r_max");
  if (!(sigma_c2 > 0.0 && sigma_r3 > 0.0))
    throw std::invalid_argument("QuadratureConfig: sampler sigmas must be positive");
}

std::complex<double> fd_partial(const std::function<std::complex<double>(const R3Point&)>& f,
                                const R3Point& p, const std::array<double, 3>& dir, double h) {
  const R3Point fp{p.x1 + h * dir[0], p.x2 + h * dir[1], p.x3 + h * dir[2]};
  const R3Point fm{p.x1 - h * dir[0], p.x2 - h * dir[1], p.x3 - h * dir[2]};
  return (f(fp) - f(fm)) / (2.0 * h);
}

std::complex<double> fd_partial_c2(const std::function<std::complex<double>(const CPoint&)>& f,
                                   const CPoint& p, const std::array<double, 4>& dir, double h) {
  auto shift = [&](double sgn) {
    return CPoint{p.z1 + sgn * h * std::complex<double>(dir[0], dir[1]),
                  p.z2 + sgn * h * std::complex<double>(dir[2], dir[3])};
  };
  return (f(shift(1.0)) - f(shift(-1.0))) / (2.0 * h);
}

std::complex<double> fd_second(const std::function<std::complex<double>(const R3Point&)>& f,
                               const R3Point& p, int axis, double h) {
  std::array<double, 3> dir{0.0, 0.0, 0.0};
  dir[axis] = 1.0;
  const R3Point fp{p.x1 + h * dir[0], p.x2 + h * dir[1], p.x3 + h * dir[2]};
  const R3Point fm{p.x1 - h * dir[0], p.x2 - h * dir[1], p.x3 - h * dir[2]};
  return (f(fp) - 2.0 * f(p) + f(fm)) / (h * h);
}

std::array<std::complex<double>, 3> spherical_curl(const SphericalField& a, double r, double theta,
                                                   double phi, double h) {
  if (theta < 10.0 * h || theta > kPi - 10.0 * h)
    throw PoleError("spherical_curl: theta too close to a coordinate pole");
  if (r < 10.0 * h) throw PoleError("spherical_curl: r too close to the origin");

  const double st = std::sin(theta);
  auto comp = [&](double rr, double tt, double pp, int idx) { return a(rr, tt, pp)[idx]; };

  // (rot A)_r = [d_theta(sin(theta) A_phi) - d_phi A_theta] / (r sin(theta))
  const std::complex<double> d_theta_sinAphi =
      (std::sin(theta + h) * comp(r, theta + h, phi, 2) -
       std::sin(theta - h) * comp(r, theta - h, phi, 2)) /
      (2.0 * h);
  const std::complex<double> d_phi_Atheta =
      (comp(r, theta, phi + h, 1) - comp(r, theta, phi - h, 1)) / (2.0 * h);
  // (rot A)_theta = d_phi A_r / (r sin(theta)) - d_r(r A_phi) / r
  const std::complex<double> d_phi_Ar =
      (comp(r, theta, phi + h, 0) - comp(r, theta, phi - h, 0)) / (2.0 * h);
  const std::complex<double> d_r_rAphi =
      ((r + h) * comp(r + h, theta, phi, 2) - (r - h) * comp(r - h, theta, phi, 2)) / (2.0 * h);
  // (rot A)_phi = [d_r(r A_theta) - d_theta A_r] / r
  const std::complex<double> d_r_rAtheta =
      ((r + h) * comp(r + h, theta, phi, 1) - (r - h) * comp(r - h, theta, phi, 1)) / (2.0 * h);
  const std::complex<double> d_theta_Ar =
      (comp(r, theta + h, phi, 0) - comp(r, theta - h, phi, 0)) / (2.0 * h);

  return {(d_theta_sinAphi - d_phi_Atheta) / (r * st), d_phi_Ar / (r * st) - d_r_rAphi / r,
          (d_r_rAtheta - d_theta_Ar) / r};
}

McEstimate mc_norm_c2(const std::function<std::complex<double>(const CPoint&)>& f,
                      const QuadratureConfig& cfg) {
  cfg.validate();
  const double sigma = cfg.sigma_c2;
  const double qnorm = 1.0 / (std::pow(2.0 * kPi * sigma * sigma, 2.0));  // 4D Gaussian density
  auto one = [&](NormalSource& src) -> double {
    const CPoint p{{sigma * src.next(), sigma * src.next()},
                   {sigma * src.next(), sigma * src.next()}};
    const double r = p.radius();
    if (r < cfg.r_min || r > cfg.r_max || r == 0.0) return 0.0;
    const double q = qnorm * std::exp(-0.5 * r / (sigma * sigma));
    // weight (2r/pi) against dz dzbar = 2 d^4u, i.e. (4r/pi) on Lebesgue.
    const double integrand = (4.0 * r / kPi) * std::norm(f(p));
    return integrand / q;
  };
  return reduce_importance_samples(one, cfg.samples, cfg.seed);
}

McEstimate mc_norm_c2(const SymFunc& f, const std::function<double(double r)>& envelope,
                      const QuadratureConfig& cfg) {
  return mc_norm_c2(
      [&](const CPoint& p) { return eval(f, p) * envelope(p.radius()); }, cfg);
}

McEstimate mc_norm_r3(const std::function<std::complex<double>(const R3Point&)>& g,
                      const QuadratureConfig& cfg) {
  cfg.validate();
  const double sigma = cfg.sigma_r3;
  const double qnorm = 1.0 / std::pow(2.0 * kPi * sigma * sigma, 1.5);
  auto one = [&](NormalSource& src) -> double {
    const R3Point p{sigma * src.next(), sigma * src.next(), sigma * src.next()};
    const double r2 = p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3;
    const double r = std::sqrt(r2);
    if (r < cfg.r_min || r > cfg.r_max) return 0.0;
    const double q = qnorm * std::exp(-0.5 * r2 / (sigma * sigma));
    return std::norm(g(p)) / q;
  };
  return reduce_importance_samples(one, cfg.samples, cfg.seed);
}

double sphere_flux(const std::function<std::array<double, 3>(const R3Point&)>& field,
                   double radius, int n_theta, int n_phi) {
  if (radius <= 0.0) throw std::invalid_argument("sphere_flux: radius must be positive");
  if (n_theta < 2 || n_phi < 2) throw std::invalid_argument("sphere_flux: grid too small");
  KahanSum acc;
  const double du = 2.0 / n_theta;        // midpoint rule in u = cos(theta)
  const double dphi = 2.0 * kPi / n_phi;  // midpoint rule in phi
  for (int j = 0; j < n_theta; ++j) {
    const double u = -1.0 + (j + 0.5) * du;
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int k = 0; k < n_phi; ++k) {
      const double phi = (k + 0.5) * dphi;
      const R3Point n{st * std::cos(phi), st * std::sin(phi), u};
      const R3Point x{radius * n.x1, radius * n.x2, radius * n.x3};
      const auto b = field(x);
      acc.add((b[0] * n.x1 + b[1] * n.x2 + b[2] * n.x3) * radius * radius * du * dphi);
    }
  }
  return acc.value();
}

}  // namespace c2qm
