#include "c2qm/oracle.hpp"

#include <cmath>
#include <string>

namespace c2qm {

CPointSampler::CPointSampler(std::uint64_t seed, double lo, double hi)
    : engine_(seed), lo_(lo), hi_(hi) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("CPointSampler: need 0 < lo < hi");
}

double CPointSampler::uniform(double a, double b) {
  // 53-bit mantissa scaling; avoids the implementation-defined behavior of
  // std::uniform_real_distribution.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

std::complex<double> CPointSampler::component() {
  for (;;) {
    const double re = uniform(-hi_, hi_);
    const double im = uniform(-hi_, hi_);
    const double m = std::hypot(re, im);
    if (m >= lo_ && m <= hi_) return {re, im};
  }
}

CPoint CPointSampler::next() { return CPoint{component(), component()}; }

CPoint CPointSampler::next_in_radius(double r_lo, double r_hi) {
  for (;;) {
    const CPoint p = next();
    const double r = p.radius();
    if (r >= r_lo && r <= r_hi) return p;
  }
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& label, std::int64_t a,
                          std::int64_t b) {
  // FNV-1a over the label, then splitmix-style avalanche of the parameters.
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : label) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  h ^= base + 0x9e3779b97f4a7c15ull;
  h ^= static_cast<std::uint64_t>(a) * 0xbf58476d1ce4e5b9ull;
  h ^= static_cast<std::uint64_t>(b) * 0x94d049bb133111ebull;
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  return h;
}

OracleResult approx_equal(const SymFunc& f, const SymFunc& g, CPointSampler& sampler, double tol,
                          int points) {
  OracleResult res;
  for (int k = 0; k < points; ++k) {
    const CPoint p = sampler.next();
    const std::complex<double> fv = eval(f, p);
    const std::complex<double> gv = eval(g, p);
    const double dev = std::abs(fv - gv) / (1.0 + std::abs(fv));
    if (dev > res.max_dev) res.max_dev = dev;
    if (!(dev <= tol)) res.ok = false;
  }
  return res;
}

OracleResult approx_equal(const SymFunc& f, const SymFunc& g, double tol, int points,
                          std::uint64_t seed) {
  CPointSampler sampler(seed);
  return approx_equal(f, g, sampler, tol, points);
}

}  // namespace c2qm
