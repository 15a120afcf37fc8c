#pragma once

#include <complex>
#include <string>
#include <vector>

#include "c2qm/coords.hpp"
#include "c2qm/rational.hpp"

namespace c2qm {

/// Thrown by eval when a factor z^p with p negative or non-integer is
/// requested at z == 0 (a branch point of the principal power).
class BranchPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The four complex variables. r = z1 z1* + z2 z2* is carried as an
/// independent symbol with dr/dz_a = z_a* and dr/dz_a* = z_a; it is never
/// expanded, so representations of the same function are not unique and
/// equality is decided by the randomized evaluation oracle, not by form.
enum class Var { z1, z1s, z2, z2s };

/// Exponent tuple (r, z1, z1*, z2, z2*) of a single term. All denominators
/// must divide 4.
struct ExpTuple {
  Rational s;   // power of r
  Rational p1;  // power of z1
  Rational q1;  // power of z1*
  Rational p2;  // power of z2
  Rational q2;  // power of z2*

  bool operator==(const ExpTuple&) const = default;
  std::strong_ordering operator<=>(const ExpTuple&) const = default;

  ExpTuple operator+(const ExpTuple& o) const {
    return ExpTuple{s + o.s, p1 + o.p1, q1 + o.q1, p2 + o.p2, q2 + o.q2};
  }
  ExpTuple operator-() const { return ExpTuple{-s, -p1, -q1, -p2, -q2}; }
};

/// One term c * r^s * z1^p1 * z1*^q1 * z2^p2 * z2*^q2.
struct SymTerm {
  std::complex<double> coeff;
  ExpTuple e;
};

/// A finite sum of terms, kept sorted by exponent tuple with like terms
/// merged and exact-zero coefficients dropped. The empty sum is the zero
/// function.
class SymFunc {
 public:
  SymFunc() = default;

  static SymFunc zero() { return SymFunc(); }
  static SymFunc constant(std::complex<double> c);
  static SymFunc one() { return constant(1.0); }
  /// Single term; validates that every exponent denominator divides 4.
  static SymFunc term(std::complex<double> c, const ExpTuple& e);
  static SymFunc variable(Var v);
  static SymFunc r_power(const Rational& s);

  const std::vector<SymTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// True when every term has equal total z and z* degree (p1+p2 == q1+q2),
  /// i.e. the function descends to R^3 through the Hopf map.
  bool is_restricted() const;

  /// Coefficient conjugation plus the swap z <-> z*. Coincides with pointwise
  /// complex conjugation of eval away from the principal-branch cut.
  SymFunc conjugate() const;

  /// Multiplicative inverse of a single-term function (negated exponents).
  /// Throws std::invalid_argument unless size() == 1.
  SymFunc inverse_term() const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { a += b; return a; }
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

 private:
  void normalize();

  std::vector<SymTerm> terms_;
};

SymFunc scale(std::complex<double> c, const SymFunc& f);

/// Multiply by r^power (shifts every term's s exponent).
SymFunc r_times(const SymFunc& f, const Rational& power);

/// Wirtinger-style partial derivative with dr/dz_a = z_a*, dr/dz_a* = z_a.
SymFunc partial(const SymFunc& f, Var v);

/// Poisson bracket {f, g} = -i sum_a (d_{z_a} f d_{z_a*} g - d_{z_a*} f d_{z_a} g),
/// realizing {z_a, z_b*} = -i delta_ab.
SymFunc poisson(const SymFunc& f, const SymFunc& g);

/// Principal-branch power w^e = |w|^e e^{i e arg w}, arg in (-pi, pi].
/// w == 0 yields 0 for positive integer e and throws BranchPointError for
/// negative or non-integer e.
std::complex<double> pow_principal(std::complex<double> w, const Rational& e);

/// Evaluate at a point, with z* taken as conj(z) and r = |z1|^2 + |z2|^2.
std::complex<double> eval(const SymFunc& f, const CPoint& p);

std::string to_string(const SymFunc& f);

}  // namespace c2qm
