#pragma once

#include <array>
#include <functional>
#include <string>

#include "c2qm/symfunc.hpp"

namespace c2qm {

enum class Axis { x1 = 0, x2 = 1, x3 = 2 };
inline constexpr std::array<Axis, 3> kAxes{Axis::x1, Axis::x2, Axis::x3};

/// Pauli matrices sigma^1, sigma^2, sigma^3. The constructor checks the
/// algebra sigma^i sigma^j = delta_ij I + i eps_ijk sigma^k once; access goes
/// through the shared instance returned by pauli().
class PauliMatrices {
 public:
  PauliMatrices();
  std::complex<double> sigma(Axis i, int alpha, int beta) const {
    return m_[static_cast<int>(i)][alpha][beta];
  }

 private:
  std::complex<double> m_[3][2][2];
};

const PauliMatrices& pauli();

/// x_i = zbar sigma^i z as a SymFunc (the Hopf coordinates).
SymFunc hopf_coordinate(Axis i);

/// Levi-Civita symbol eps_ijk with eps_123 = +1.
int epsilon(Axis i, Axis j, Axis k);

/// Laplace operator (1/r) sum_a d_{z_a} d_{z_a*}. Acts as the R^3 Laplacian
/// on restricted states; the nested-Poisson form (1/r){z_a*, {z_a, .}} is
/// algebraically identical and kept as a test-side cross-check.
SymFunc laplace(const SymFunc& f);

/// Position operator: multiplication by x_i.
SymFunc position(Axis i, const SymFunc& f);

/// Velocity operator -(i/2r) sigma^i_{ab} (z_a* d_{z_b*} + z_b d_{z_a}).
/// Equals -i d_{x_i} on restricted states and -(i/2)[laplace, position_i]
/// on everything in the algebra.
SymFunc velocity(Axis i, const SymFunc& f);

/// Angular momentum L_i = (i/2){x_i, .}. su(2): [L_1, L_2] = i L_3.
SymFunc angular_momentum(Axis i, const SymFunc& f);

/// Fiber momentum (1/r) d_gamma = (i/2r)(z_a d_{z_a} - z_a* d_{z_a*}).
/// Annihilates restricted states; r * v4 has eigenvalue i kappa / 2 on the
/// monopole sector kappa.
SymFunc v4(const SymFunc& f);

/// A named linear operator on SymFunc, for building commutators.
class LinOp {
 public:
  LinOp(std::string name, std::function<SymFunc(const SymFunc&)> fn);

  SymFunc operator()(const SymFunc& f) const { return fn_(f); }
  const std::string& name() const { return name_; }

  static LinOp laplacian();
  static LinOp position_op(Axis i);
  static LinOp velocity_op(Axis i);
  static LinOp angular_momentum_op(Axis i);
  static LinOp v4_op();

 private:
  std::string name_;
  std::function<SymFunc(const SymFunc&)> fn_;
};

/// [A, B] f = A(B f) - B(A f).
SymFunc commutator(const LinOp& a, const LinOp& b, const SymFunc& f);

}  // namespace c2qm
