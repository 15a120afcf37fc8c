#pragma once

#include <cstdint>
#include <random>

#include "c2qm/symfunc.hpp"

namespace c2qm {

inline constexpr double kDefaultSymTol = 1e-9;
inline constexpr double kDefaultFdTol = 1e-5;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Deterministic sampler of C^2 points. Components are drawn uniformly from
/// the square [-hi, hi]^2 and rejected until hi >= |z_a| >= lo, which keeps
/// every factor z^p well away from the branch point at 0. Uniform deviates
/// are built from raw engine output so the stream is identical on every
/// platform for a given seed.
class CPointSampler {
 public:
  explicit CPointSampler(std::uint64_t seed = kDefaultSeed, double lo = 0.2, double hi = 2.0);

  CPoint next();

  /// Re-draw until the C^2 radius lands in [r_lo, r_hi] (used by oracles that
  /// need evaluation points away from both the origin and large radii).
  CPoint next_in_radius(double r_lo, double r_hi);

 private:
  double uniform(double a, double b);
  std::complex<double> component();

  std::mt19937_64 engine_;
  double lo_;
  double hi_;
};

/// Derive a fresh stream seed from a base seed and a label (used so every
/// identity in a verification run gets its own reproducible points).
std::uint64_t derive_seed(std::uint64_t base, const std::string& label, std::int64_t a = 0,
                          std::int64_t b = 0);

/// Outcome of a randomized equality check: ok iff
/// |f(p) - g(p)| <= tol * (1 + |f(p)|) at every sampled point.
/// max_dev is the largest observed |f - g| / (1 + |f|).
struct OracleResult {
  bool ok = true;
  double max_dev = 0.0;
  explicit operator bool() const { return ok; }
};

OracleResult approx_equal(const SymFunc& f, const SymFunc& g, CPointSampler& sampler,
                          double tol = kDefaultSymTol, int points = 25);

/// Convenience overload with a fresh default-configured sampler.
OracleResult approx_equal(const SymFunc& f, const SymFunc& g, double tol = kDefaultSymTol,
                          int points = 25, std::uint64_t seed = kDefaultSeed);

}  // namespace c2qm
