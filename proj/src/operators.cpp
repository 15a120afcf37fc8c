#include "c2qm/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace c2qm {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

Var plain_var(int alpha) { return alpha == 0 ? Var::z1 : Var::z2; }
Var star_var(int alpha) { return alpha == 0 ? Var::z1s : Var::z2s; }

}  // namespace

PauliMatrices::PauliMatrices() {
  const std::complex<double> z{0.0, 0.0}, one{1.0, 0.0};
  std::complex<double> s1[2][2] = {{z, one}, {one, z}};
  std::complex<double> s2[2][2] = {{z, -I}, {I, z}};
  std::complex<double> s3[2][2] = {{one, z}, {z, -one}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      m_[0][a][b] = s1[a][b];
      m_[1][a][b] = s2[a][b];
      m_[2][a][b] = s3[a][b];
    }
  // sigma^i sigma^j = delta_ij I + i eps_ijk sigma^k, checked once here.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          std::complex<double> prod{0.0, 0.0};
          for (int c = 0; c < 2; ++c) prod += m_[i][a][c] * m_[j][c][b];
          std::complex<double> expect = (i == j && a == b) ? one : z;
          for (int k = 0; k < 3; ++k) {
            const int eps = epsilon(static_cast<Axis>(i), static_cast<Axis>(j), static_cast<Axis>(k));
            if (eps != 0) expect += I * static_cast<double>(eps) * m_[k][a][b];
          }
          if (std::abs(prod - expect) > 1e-15)
            throw std::logic_error("PauliMatrices: algebra check failed");
        }
}

const PauliMatrices& pauli() {
  static const PauliMatrices instance;
  return instance;
}

int epsilon(Axis i, Axis j, Axis k) {
  const int a = static_cast<int>(i), b = static_cast<int>(j), c = static_cast<int>(k);
  if (a == b || b == c || a == c) return 0;
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

SymFunc hopf_coordinate(Axis i) {
  SymFunc x;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const std::complex<double> c = pauli().sigma(i, a, b);
      if (c == std::complex<double>(0.0, 0.0)) continue;
      x += scale(c, SymFunc::variable(star_var(a)) * SymFunc::variable(plain_var(b)));
    }
  return x;
}

SymFunc laplace(const SymFunc& f) {
  SymFunc acc;
  for (int a = 0; a < 2; ++a) acc += partial(partial(f, star_var(a)), plain_var(a));
  return r_times(acc, Rational(-1));
}

SymFunc position(Axis i, const SymFunc& f) { return hopf_coordinate(i) * f; }

SymFunc velocity(Axis i, const SymFunc& f) {
  SymFunc acc;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const std::complex<double> c = pauli().sigma(i, a, b);
      if (c == std::complex<double>(0.0, 0.0)) continue;
      acc += scale(c, SymFunc::variable(star_var(a)) * partial(f, star_var(b)));
      acc += scale(c, SymFunc::variable(plain_var(b)) * partial(f, plain_var(a)));
    }
  return scale(-0.5 * I, r_times(acc, Rational(-1)));
}

SymFunc angular_momentum(Axis i, const SymFunc& f) {
  return scale(0.5 * I, poisson(hopf_coordinate(i), f));
}

SymFunc v4(const SymFunc& f) {
  SymFunc acc;
  for (int a = 0; a < 2; ++a) {
    acc += SymFunc::variable(plain_var(a)) * partial(f, plain_var(a));
    acc += -(SymFunc::variable(star_var(a)) * partial(f, star_var(a)));
  }
  return scale(0.5 * I, r_times(acc, Rational(-1)));
}

LinOp::LinOp(std::string name, std::function<SymFunc(const SymFunc&)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {}

LinOp LinOp::laplacian() {
  return LinOp("laplace", [](const SymFunc& f) { return laplace(f); });
}

LinOp LinOp::position_op(Axis i) {
  return LinOp("x" + std::to_string(static_cast<int>(i) + 1),
               [i](const SymFunc& f) { return position(i, f); });
}

LinOp LinOp::velocity_op(Axis i) {
  return LinOp("V" + std::to_string(static_cast<int>(i) + 1),
               [i](const SymFunc& f) { return velocity(i, f); });
}

LinOp LinOp::angular_momentum_op(Axis i) {
  return LinOp("L" + std::to_string(static_cast<int>(i) + 1),
               [i](const SymFunc& f) { return angular_momentum(i, f); });
}

LinOp LinOp::v4_op() {
  return LinOp("V4", [](const SymFunc& f) { return v4(f); });
}

SymFunc commutator(const LinOp& a, const LinOp& b, const SymFunc& f) {
  return a(b(f)) - b(a(f));
}

}  // namespace c2qm
