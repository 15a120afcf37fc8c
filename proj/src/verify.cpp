#include "c2qm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "c2qm/monopole.hpp"
#include "c2qm/operators.hpp"
#include "c2qm/oracle.hpp"

namespace c2qm {

QuadratureConfig VerifyOptions::quad() const {
  QuadratureConfig cfg;
  cfg.samples = mc_samples;
  cfg.seed = seed;
  cfg.fd_step = fd_step;
  cfg.fd_step_second = fd_step_second;
  cfg.validate();
  return cfg;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> I{0.0, 1.0};

double uniform01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& eng, double a, double b) { return a + (b - a) * uniform01(eng); }

// A restricted test state kept in two independent representations: the
// algebra element and a plain R^3 evaluator built from the same monomials.
struct RestrictedState {
  SymFunc sym;
  std::function<std::complex<double>(const R3Point&)> fn;
};

RestrictedState random_restricted_state(std::mt19937_64& eng) {
  struct Monomial {
    double coeff;
    int a, b, c, k;
  };
  std::vector<Monomial> monomials;
  const int nterms = 1 + static_cast<int>(eng() % 3);
  for (int t = 0; t < nterms; ++t) {
    Monomial m{};
    do {
      m.a = static_cast<int>(eng() % 4);
      m.b = static_cast<int>(eng() % 4);
      m.c = static_cast<int>(eng() % 4);
    } while (m.a + m.b + m.c > 3);
    m.k = -static_cast<int>(eng() % 3);
    do {
      m.coeff = static_cast<double>(static_cast<int>(eng() % 5)) - 2.0;
    } while (m.coeff == 0.0);
    monomials.push_back(m);
  }
  SymFunc sym;
  for (const Monomial& m : monomials) {
    SymFunc term = SymFunc::r_power(Rational(m.k));
    for (int k = 0; k < m.a; ++k) term = term * hopf_coordinate(Axis::x1);
    for (int k = 0; k < m.b; ++k) term = term * hopf_coordinate(Axis::x2);
    for (int k = 0; k < m.c; ++k) term = term * hopf_coordinate(Axis::x3);
    sym += scale(m.coeff, term);
  }
  auto fn = [monomials](const R3Point& x) -> std::complex<double> {
    double acc = 0.0;
    const double r = x.norm();
    for (const Monomial& m : monomials)
      acc += m.coeff * std::pow(x.x1, m.a) * std::pow(x.x2, m.b) * std::pow(x.x3, m.c) *
             std::pow(r, m.k);
    return acc;
  };
  return RestrictedState{sym, fn};
}

double hybrid_dev(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

SphPoint random_sph_point(std::mt19937_64& eng, double theta_margin = 0.2) {
  return SphPoint{uniform(eng, 0.4, 2.5), uniform(eng, theta_margin, kPi - theta_margin),
                  uniform(eng, -kPi, kPi)};
}

struct Suite {
  explicit Suite(const VerifyOptions& o) : opts(o), cfg(o.quad()) {}

  const VerifyOptions& opts;
  QuadratureConfig cfg;
  std::vector<VerifyRecord> records;

  void add(const std::string& name, const std::string& eq, int kappa, int delta, double dev,
           double tol) {
    records.push_back(VerifyRecord{name, eq, kappa, delta, dev, tol, dev <= tol});
  }

  std::vector<int> delta_range(int kappa) const {
    std::vector<int> out;
    if (opts.delta) {
      if (std::abs(*opts.delta) <= kappa) out.push_back(*opts.delta);
    } else {
      for (int d = -kappa; d <= kappa; ++d) out.push_back(d);
    }
    return out;
  }

  std::vector<SymFunc> phi_set() const {
    return {SymFunc::one(), hopf_coordinate(Axis::x3), SymFunc::r_power(Rational(2))};
  }

  // --- restricted-sector finite-difference records -------------------------

  void restricted_fd_records() {
    std::mt19937_64 eng(derive_seed(opts.seed, "restricted-states"));
    CPointSampler sampler(derive_seed(opts.seed, "restricted-points"));
    double dev_lap = 0.0, dev_vel = 0.0, dev_ang = 0.0;
    for (int s = 0; s < opts.fd_states; ++s) {
      const RestrictedState st = random_restricted_state(eng);
      const SymFunc lap = laplace(st.sym);
      std::array<SymFunc, 3> vel, ang;
      for (Axis i : kAxes) {
        vel[static_cast<int>(i)] = velocity(i, st.sym);
        ang[static_cast<int>(i)] = angular_momentum(i, st.sym);
      }
      for (int kp = 0; kp < opts.fd_points; ++kp) {
        const CPoint p = sampler.next_in_radius(0.6, 2.5);
        const R3Point x = hopf_map(p);
        // Laplacian against the 3-point second-difference stencil.
        std::complex<double> fd_lap = 0.0;
        for (int axis = 0; axis < 3; ++axis)
          fd_lap += fd_second(st.fn, x, axis, cfg.fd_step_second);
        dev_lap = std::max(dev_lap, hybrid_dev(eval(lap, p), fd_lap));
        // Velocity against -i grad, angular momentum against -i x cross grad.
        std::array<std::complex<double>, 3> grad;
        for (int axis = 0; axis < 3; ++axis) {
          std::array<double, 3> dir{0.0, 0.0, 0.0};
          dir[axis] = 1.0;
          grad[axis] = fd_partial(st.fn, x, dir, cfg.fd_step);
        }
        const std::array<double, 3> xv{x.x1, x.x2, x.x3};
        for (Axis i : kAxes) {
          const int a = static_cast<int>(i);
          dev_vel = std::max(dev_vel, hybrid_dev(eval(vel[a], p), -I * grad[a]));
          const int b = (a + 1) % 3, c = (a + 2) % 3;
          const std::complex<double> l_fd = -I * (xv[b] * grad[c] - xv[c] * grad[b]);
          dev_ang = std::max(dev_ang, hybrid_dev(eval(ang[a], p), l_fd));
        }
      }
    }
    add("laplace-fd-restricted", "Lap f = d_i d_i f (restricted)", 0, 0, dev_lap, opts.tol_fd);
    add("velocity-fd-restricted", "V_i f = -i d_i f (restricted)", 0, 0, dev_vel, opts.tol_fd);
    add("angular-fd-restricted", "L_i f = -i eps_ijk x_j d_k f (restricted)", 0, 0, dev_ang,
        opts.tol_fd);

    // L_i = eps_ijk x_j V_k symbolically on the same sector.
    std::mt19937_64 eng2(derive_seed(opts.seed, "restricted-states"));
    double dev = 0.0;
    for (int s = 0; s < std::min(opts.fd_states, 8); ++s) {
      const RestrictedState st = random_restricted_state(eng2);
      for (Axis i : kAxes) {
        SymFunc rhs;
        for (Axis j : kAxes)
          for (Axis k : kAxes) {
            const int eps = epsilon(i, j, k);
            if (eps != 0) rhs += scale(static_cast<double>(eps), position(j, velocity(k, st.sym)));
          }
        CPointSampler osamp(derive_seed(opts.seed, "angular-xv", s, static_cast<int>(i)));
        const OracleResult r =
            approx_equal(angular_momentum(i, st.sym), rhs, osamp, opts.tol_sym, opts.oracle_points);
        dev = std::max(dev, r.max_dev);
      }
    }
    add("angular-from-x-cross-v", "L_i = eps_ijk x_j V_k (restricted)", 0, 0, dev, opts.tol_sym);
  }

  // --- global operator-algebra records -------------------------------------

  void su2_record() {
    std::vector<SymFunc> test = phi_set();
    test.push_back(hopf_coordinate(Axis::x1) * hopf_coordinate(Axis::x2) *
                   SymFunc::r_power(Rational(-1)));
    if (opts.kappa_max >= 2) test.push_back(hopf_coordinate(Axis::x3) * xi_factor(2, 0));
    double dev = 0.0;
    for (std::size_t t = 0; t < test.size(); ++t) {
      for (int i = 0; i < 3; ++i) {
        const Axis ai = static_cast<Axis>(i), aj = static_cast<Axis>((i + 1) % 3),
                   ak = static_cast<Axis>((i + 2) % 3);
        const SymFunc lhs = commutator(LinOp::angular_momentum_op(ai),
                                       LinOp::angular_momentum_op(aj), test[t]);
        const SymFunc rhs = scale(I, angular_momentum(ak, test[t]));
        CPointSampler samp(derive_seed(opts.seed, "su2", static_cast<int>(t), i));
        dev = std::max(dev, approx_equal(lhs, rhs, samp, opts.tol_sym, opts.oracle_points).max_dev);
      }
    }
    add("su2-algebra", "[L_i, L_j] = i eps_ijk L_k", 0, 0, dev, opts.tol_sym);
  }

  // --- per-sector records ---------------------------------------------------

  void sector_records(int kappa, int delta) {
    const SymFunc xi = xi_factor(kappa, delta);
    std::vector<SymFunc> states;
    for (const SymFunc& phi : phi_set()) states.push_back(phi * xi);

    // Defining relation V_i = -(i/2)[Lap, x_i] on the sector.
    {
      double dev = 0.0;
      for (std::size_t t = 0; t < states.size(); ++t)
        for (Axis i : kAxes) {
          const SymFunc lhs = velocity(i, states[t]);
          const SymFunc rhs = scale(-0.5 * I, commutator(LinOp::laplacian(), LinOp::position_op(i),
                                                         states[t]));
          CPointSampler samp(derive_seed(opts.seed, "half-comm", kappa * 100 + delta,
                                         static_cast<int>(t) * 4 + static_cast<int>(i)));
          dev = std::max(dev,
                         approx_equal(lhs, rhs, samp, opts.tol_sym, opts.oracle_points).max_dev);
        }
      add("half-commutator-defn", "V_i = -(i/2)[Lap, x_i]", kappa, delta, dev, opts.tol_sym);
    }

    // Velocity commutator [V_i, V_j] = (kappa/2) i eps_ijk x_k / r^3.
    {
      double dev = 0.0;
      for (std::size_t t = 0; t < states.size(); ++t)
        for (int i = 0; i < 3; ++i) {
          const Axis ai = static_cast<Axis>(i), aj = static_cast<Axis>((i + 1) % 3),
                     ak = static_cast<Axis>((i + 2) % 3);
          const SymFunc lhs =
              commutator(LinOp::velocity_op(ai), LinOp::velocity_op(aj), states[t]);
          const SymFunc rhs = scale(0.5 * kappa * I,
                                    r_times(hopf_coordinate(ak), Rational(-3)) * states[t]);
          CPointSampler samp(derive_seed(opts.seed, "vel-comm", kappa * 100 + delta,
                                         static_cast<int>(t) * 4 + i));
          dev = std::max(dev,
                         approx_equal(lhs, rhs, samp, opts.tol_sym, opts.oracle_points).max_dev);
        }
      add("velocity-commutator", "[V_i, V_j] = (kappa/2) i eps_ijk x_k / r^3", kappa, delta, dev,
          opts.tol_sym);
    }

    // Angular shift eps_ijk x_j V_k = L_i + (kappa/2) x_i / r.
    {
      double dev = 0.0;
      for (const SymFunc& phi : phi_set()) {
        const MonopoleState st = make_state(phi, kappa, delta);
        const auto res = angular_shift_residual(st);
        for (Axis i : kAxes) {
          CPointSampler samp(derive_seed(opts.seed, "angular-shift", kappa * 100 + delta,
                                         static_cast<int>(i)));
          dev = std::max(dev, approx_equal(res[static_cast<int>(i)], SymFunc::zero(), samp,
                                           opts.tol_sym, opts.oracle_points)
                                  .max_dev);
        }
      }
      add("angular-shift", "eps_ijk x_j V_k = L_i + (kappa/2) x_i / r", kappa, delta, dev,
          opts.tol_sym);
    }

    // Charge readout r V4 Phi = (i kappa / 2) Phi.
    {
      double dev = 0.0;
      for (std::size_t t = 0; t < states.size(); ++t) {
        const SymFunc lhs = r_times(v4(states[t]), Rational(1));
        const SymFunc rhs = scale(0.5 * kappa * I, states[t]);
        CPointSampler samp(derive_seed(opts.seed, "charge", kappa * 100 + delta,
                                       static_cast<int>(t)));
        dev =
            std::max(dev, approx_equal(lhs, rhs, samp, opts.tol_sym, opts.oracle_points).max_dev);
      }
      add("charge-v4", "r V4 Phi = (i kappa / 2) Phi", kappa, delta, dev, opts.tol_sym);
    }

    // Gauge potential: closed azimuthal form, vanishing A_r and A_theta,
    // vanishing imaginary part, and the kappa/delta split.
    {
      const GaugePotential pot = gauge_potential(kappa, delta);
      std::mt19937_64 eng(derive_seed(opts.seed, "aphi", kappa, delta));
      double dev_aphi = 0.0, dev_rest = 0.0;
      for (int k = 0; k < opts.aphi_points; ++k) {
        const SphPoint s = random_sph_point(eng, 0.1);
        const SphericalComponents c = pot.spherical_at(s.r, s.theta, s.phi);
        const double want = a_phi_closed_form(kappa, delta, s.r, s.theta);
        const double split =
            pot.a_phi_kappa_part(s.r, s.theta) + pot.a_phi_delta_part(s.r, s.theta);
        dev_aphi = std::max(dev_aphi, hybrid_dev(c.a_phi, want));
        dev_aphi = std::max(dev_aphi, hybrid_dev(split, want));
        dev_rest = std::max({dev_rest, std::abs(c.a_r), std::abs(c.a_theta)});
      }
      add("aphi-closed-form", "A_phi = (delta + kappa cos th) / (2 r sin th)", kappa, delta,
          dev_aphi, opts.tol_sym);
      add("ar-atheta-zero", "A_r = A_theta = 0", kappa, delta, dev_rest, opts.tol_sym);
    }

    // FD curl against the closed-form field.
    {
      std::mt19937_64 eng(derive_seed(opts.seed, "curl", kappa, delta));
      std::vector<SphPoint> pts;
      pts.reserve(opts.curl_points);
      for (int k = 0; k < opts.curl_points; ++k) pts.push_back(random_sph_point(eng));
      add("curl-matches-field", "rot A = -(kappa/2) x / r^3", kappa, delta,
          curl_check(kappa, delta, pts, cfg), opts.tol_curl);
    }

    // Dirac string layout.
    {
      const StringClassification got = string_singularities(kappa, delta);
      const bool north = delta != -kappa;
      const bool south = delta != kappa;
      const double mismatches =
          static_cast<double>((got.north != north) + (got.south != south));
      add("strings", "A_phi diverges: north iff delta != -kappa, south iff delta != kappa", kappa,
          delta, mismatches, 0.5);
    }
  }

  // --- per-kappa records ----------------------------------------------------

  void flux_record(int kappa) {
    const double flux = sphere_flux(
        [kappa](const R3Point& x) { return magnetic_field(kappa, x); }, 1.0, 200, 200);
    const double want = -2.0 * kPi * kappa;
    const double dev = std::abs(flux - want) / std::max(1.0, std::abs(want));
    add("flux-quantization", "flux(S^2) = -2 pi kappa", kappa, 0, dev, opts.flux_rtol);
  }

  void delta_independence_record(int kappa) {
    const auto deltas = delta_range(kappa);
    if (deltas.size() < 2) {
      add("delta-independence", "B independent of delta", kappa, 0, 0.0, opts.tol_curl);
      return;
    }
    std::mt19937_64 eng(derive_seed(opts.seed, "delta-indep", kappa));
    std::vector<SphPoint> pts;
    for (int k = 0; k < 10; ++k) pts.push_back(random_sph_point(eng));
    double dev = 0.0;
    std::vector<std::array<std::complex<double>, 3>> ref;
    bool have_ref = false;
    for (const int d : deltas) {
      const GaugePotential pot = gauge_potential(kappa, d);
      SphericalField field = [&pot](double r, double th, double ph) {
        const SphericalComponents c = pot.spherical_at(r, th, ph);
        return std::array<std::complex<double>, 3>{c.a_r, c.a_theta, c.a_phi};
      };
      std::vector<std::array<std::complex<double>, 3>> cur;
      for (const SphPoint& s : pts)
        cur.push_back(spherical_curl(field, s.r, s.theta, s.phi, cfg.fd_step));
      if (!have_ref) {
        ref = cur;
        have_ref = true;
        continue;
      }
      for (std::size_t k = 0; k < pts.size(); ++k) {
        const double denom =
            kappa == 0 ? 1.0 : 0.5 * std::abs(kappa) / (pts[k].r * pts[k].r);
        for (int c = 0; c < 3; ++c)
          dev = std::max(dev, std::abs(cur[k][c] - ref[k][c]) / denom);
      }
    }
    add("delta-independence", "B independent of delta", kappa, 0, dev, opts.tol_curl);
  }

  void imaginary_gauge_records(int kappa) {
    const ImaginaryGaugeResult ig = imaginary_gauge(kappa);

    // Im A = -grad log xi_radial, with xi_radial = (r sin th / 2)^{kappa/2}.
    std::mt19937_64 eng(derive_seed(opts.seed, "imgauge", kappa));
    auto log_radial = [kappa](const R3Point& x) -> std::complex<double> {
      const double rho = std::hypot(x.x1, x.x2);
      return 0.5 * kappa * std::log(0.5 * rho);
    };
    double dev_im = 0.0;
    for (int k = 0; k < 50; ++k) {
      const SphPoint s = random_sph_point(eng, 0.3);
      const R3Point x = from_spherical(s);
      const CPoint p = euler_to_c2(EulerCoords(s.r, s.theta, s.phi, 0.0));
      for (int axis = 0; axis < 3; ++axis) {
        std::array<double, 3> dir{0.0, 0.0, 0.0};
        dir[axis] = 1.0;
        const std::complex<double> want =
            kappa == 0 ? 0.0 : -fd_partial(log_radial, x, dir, cfg.fd_step);
        dev_im = std::max(dev_im, hybrid_dev(eval(ig.im_a[axis], p), want));
      }
    }
    add("imaginary-gauge-im-grad", "Im A = -grad log xi_radial", kappa, 0, dev_im, opts.tol_fd);

    // Re A carries the same field as the delta = 0 phase sector.
    SphericalField re_field = [&ig](double r, double th, double ph) {
      const SphericalComponents c = ig.potential.spherical_at(r, th, ph);
      return std::array<std::complex<double>, 3>{c.a_r.real(), c.a_theta.real(),
                                                 c.a_phi.real()};
    };
    std::mt19937_64 eng2(derive_seed(opts.seed, "imgauge-curl", kappa));
    double dev_b = 0.0;
    for (int k = 0; k < 25; ++k) {
      const SphPoint s = random_sph_point(eng2);
      const auto curl = spherical_curl(re_field, s.r, s.theta, s.phi, cfg.fd_step);
      const double b_r = -0.5 * kappa / (s.r * s.r);
      const double dev = std::sqrt(std::norm(curl[0] - b_r) + std::norm(curl[1]) +
                                   std::norm(curl[2]));
      dev_b = std::max(dev_b, dev / (kappa == 0 ? 1.0 : std::abs(b_r)));
    }
    add("imaginary-gauge-same-field", "rot Re A = -(kappa/2) x / r^3", kappa, 0, dev_b,
        opts.tol_curl);

    // Factorization xi = xi_radial * xi_fiber and the gauge transform
    // xi / xi_radial = xi_fiber (term-exact, so max_dev reports 0 or 1).
    {
      CPointSampler samp(derive_seed(opts.seed, "imgauge-fact", kappa));
      double dev = approx_equal(ig.xi, ig.xi_radial * ig.xi_fiber, samp, opts.tol_sym,
                                opts.oracle_points)
                       .max_dev;
      const SymFunc diff = ig.gauged_factor - ig.xi_fiber;
      if (!diff.is_zero()) dev = std::max(dev, 1.0);
      add("imaginary-gauge-factorization", "xi = xi_radial * xi_fiber", kappa, 0, dev,
          opts.tol_sym);
    }
  }

  // --- quadrature records -----------------------------------------------

  void norm_records() {
    // Attaching the monopole factor must not change the norm (|xi| = 1).
    // The two estimates use independent sample streams, so agreement within
    // the combined standard error is a real statement, not a tautology.
    {
      const int kappa = std::min(2, opts.kappa_max);
      const auto envelope = [](double r) { return std::exp(-r); };
      QuadratureConfig ca = cfg;
      ca.seed = derive_seed(opts.seed, "norm-dressed", kappa);
      QuadratureConfig cb = cfg;
      cb.seed = derive_seed(opts.seed, "norm-bare", kappa);
      const McEstimate a = mc_norm_c2(xi_factor(kappa, 0), envelope, ca);
      const McEstimate b = mc_norm_c2(SymFunc::one(), envelope, cb);
      const double denom = std::hypot(a.std_error, b.std_error);
      const double dev = denom == 0.0 ? 0.0 : std::abs(a.value - b.value) / denom;
      add("norm-preservation", "||Phi_kappa||^2 = ||Phi_0||^2 (MC agreement)", kappa, 0, dev,
          opts.norm_sigmas);
    }

    // The C^2 weight reproduces d^3x: || e^{-r} ||^2 = pi exactly.
    {
      auto integrand = [](const CPoint& p) {
        return std::exp(std::complex<double>(-p.radius(), 0.0));
      };
      QuadratureConfig c = cfg;
      c.seed = derive_seed(opts.seed, "weight-exp");
      const McEstimate est = mc_norm_c2(integrand, c);
      const double dev =
          est.std_error == 0.0 ? std::abs(est.value - kPi) : std::abs(est.value - kPi) / est.std_error;
      add("weight-correspondence-exp", "int (4r/pi) e^{-2r} d^4u = pi", 0, 0, dev,
          opts.norm_sigmas);
    }

    // Same Gaussian through both measures: C^2 with weight vs plain R^3.
    {
      auto gauss_c2 = [](const CPoint& p) {
        return std::exp(std::complex<double>(-0.5 * p.radius() * p.radius(), 0.0));
      };
      auto gauss_r3 = [](const R3Point& x) {
        const double r2 = x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
        return std::exp(std::complex<double>(-0.5 * r2, 0.0));
      };
      QuadratureConfig ca = cfg;
      ca.seed = derive_seed(opts.seed, "weight-gauss-c2");
      QuadratureConfig cb = cfg;
      cb.seed = derive_seed(opts.seed, "weight-gauss-r3");
      const McEstimate a = mc_norm_c2(gauss_c2, ca);
      const McEstimate b = mc_norm_r3(gauss_r3, cb);
      const double want = std::pow(kPi, 1.5);
      double dev = 0.0;
      dev = std::max(dev, std::abs(a.value - want) / std::max(a.std_error, 1e-300));
      dev = std::max(dev, std::abs(b.value - want) / std::max(b.std_error, 1e-300));
      dev = std::max(dev, std::abs(a.value - b.value) /
                              std::max(std::hypot(a.std_error, b.std_error), 1e-300));
      add("weight-correspondence-gauss", "||e^{-r^2/2}||_{C^2} = ||e^{-|x|^2/2}||_{R^3}", 0, 0,
          dev, opts.norm_sigmas);
    }
  }

  void run() {
    restricted_fd_records();
    su2_record();
    for (int kappa = 0; kappa <= opts.kappa_max; ++kappa) {
      for (const int delta : delta_range(kappa)) sector_records(kappa, delta);
      flux_record(kappa);
      delta_independence_record(kappa);
      imaginary_gauge_records(kappa);
    }
    norm_records();
    std::sort(records.begin(), records.end(), [](const VerifyRecord& a, const VerifyRecord& b) {
      if (a.name != b.name) return a.name < b.name;
      if (a.kappa != b.kappa) return a.kappa < b.kappa;
      return a.delta < b.delta;
    });
  }
};

}  // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Suite suite(opts);
  suite.run();
  VerifyReport report;
  report.seed = opts.seed;
  report.records = std::move(suite.records);
  report.pass = std::all_of(report.records.begin(), report.records.end(),
                            [](const VerifyRecord& r) { return r.pass; });
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["verdict"] = report.pass ? "pass" : "fail";
  j["seed"] = report.seed;
  j["records"] = nlohmann::ordered_json::array();
  for (const VerifyRecord& r : report.records) {
    nlohmann::ordered_json rec;
    rec["name"] = r.name;
    rec["eq"] = r.eq;
    rec["kappa"] = r.kappa;
    rec["delta"] = r.delta;
    rec["max_dev"] = r.max_dev;
    rec["tol"] = r.tol;
    rec["pass"] = r.pass;
    j["records"].push_back(rec);
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerifyReport& report) {
  std::ostringstream out;
  std::size_t name_width = 4;
  for (const VerifyRecord& r : report.records) name_width = std::max(name_width, r.name.size());
  for (const VerifyRecord& r : report.records) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    out << std::string(name_width - r.name.size() + 2, ' ');
    out << "kappa=" << r.kappa << " delta=" << r.delta;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "  max_dev=%.3e  tol=%.3e", r.max_dev, r.tol);
    out << buf << "  (" << r.eq << ")\n";
  }
  char tail[128];
  std::snprintf(tail, sizeof(tail), "%s: %zu records, seed %llu, %.2fs\n",
                report.pass ? "PASS" : "FAIL", report.records.size(),
                static_cast<unsigned long long>(report.seed), report.elapsed_seconds);
  out << tail;
  return out.str();
}

}  // namespace c2qm
