#include "c2qm/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace c2qm {

namespace {

bool denominator_ok(const Rational& x) {
  return x.den() == 1 || x.den() == 2 || x.den() == 4;
}

void check_exponents(const ExpTuple& e) {
  if (!denominator_ok(e.s) || !denominator_ok(e.p1) || !denominator_ok(e.q1) ||
      !denominator_ok(e.p2) || !denominator_ok(e.q2))
    throw std::invalid_argument("SymFunc: exponent denominators must divide 4");
}

}  // namespace

SymFunc SymFunc::constant(std::complex<double> c) { return term(c, ExpTuple{}); }

SymFunc SymFunc::term(std::complex<double> c, const ExpTuple& e) {
  check_exponents(e);
  SymFunc f;
  if (c != std::complex<double>(0.0, 0.0)) f.terms_.push_back(SymTerm{c, e});
  return f;
}

SymFunc SymFunc::variable(Var v) {
  ExpTuple e;
  switch (v) {
    case Var::z1: e.p1 = 1; break;
    case Var::z1s: e.q1 = 1; break;
    case Var::z2: e.p2 = 1; break;
    case Var::z2s: e.q2 = 1; break;
  }
  return term(1.0, e);
}

SymFunc SymFunc::r_power(const Rational& s) {
  ExpTuple e;
  e.s = s;
  return term(1.0, e);
}

bool SymFunc::is_restricted() const {
  for (const SymTerm& t : terms_)
    if (t.e.p1 + t.e.p2 != t.e.q1 + t.e.q2) return false;
  return true;
}

SymFunc SymFunc::conjugate() const {
  SymFunc g;
  g.terms_.reserve(terms_.size());
  for (const SymTerm& t : terms_)
    g.terms_.push_back(SymTerm{std::conj(t.coeff), ExpTuple{t.e.s, t.e.q1, t.e.p1, t.e.q2, t.e.p2}});
  g.normalize();
  return g;
}

SymFunc SymFunc::inverse_term() const {
  if (terms_.size() != 1)
    throw std::invalid_argument("SymFunc::inverse_term: requires exactly one term");
  const SymTerm& t = terms_.front();
  return term(1.0 / t.coeff, -t.e);
}

SymFunc SymFunc::operator-() const { return scale(-1.0, *this); }

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc out;
  std::vector<SymTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const SymTerm& ta : a.terms_)
    for (const SymTerm& tb : b.terms_)
      prod.push_back(SymTerm{ta.coeff * tb.coeff, ta.e + tb.e});
  out.terms_ = std::move(prod);
  out.normalize();
  return out;
}

void SymFunc::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const SymTerm& a, const SymTerm& b) { return a.e < b.e; });
  std::vector<SymTerm> merged;
  merged.reserve(terms_.size());
  for (const SymTerm& t : terms_) {
    if (!merged.empty() && merged.back().e == t.e)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const SymTerm& t) { return t.coeff == std::complex<double>(0.0, 0.0); });
  terms_ = std::move(merged);
}

SymFunc scale(std::complex<double> c, const SymFunc& f) {
  if (c == std::complex<double>(0.0, 0.0)) return SymFunc::zero();
  SymFunc out;
  for (const SymTerm& t : f.terms()) out += SymFunc::term(c * t.coeff, t.e);
  return out;
}

SymFunc r_times(const SymFunc& f, const Rational& power) {
  SymFunc out;
  for (const SymTerm& t : f.terms()) {
    ExpTuple e = t.e;
    e.s = e.s + power;
    out += SymFunc::term(t.coeff, e);
  }
  return out;
}

SymFunc partial(const SymFunc& f, Var v) {
  SymFunc out;
  for (const SymTerm& t : f.terms()) {
    // Chain-rule piece through r: dr/dz1 = z1*, dr/dz1* = z1, etc.
    if (!t.e.s.is_zero()) {
      ExpTuple e = t.e;
      e.s = e.s - 1;
      switch (v) {
        case Var::z1: e.q1 = e.q1 + 1; break;
        case Var::z1s: e.p1 = e.p1 + 1; break;
        case Var::z2: e.q2 = e.q2 + 1; break;
        case Var::z2s: e.p2 = e.p2 + 1; break;
      }
      out += SymFunc::term(t.coeff * t.e.s.as_double(), e);
    }
    // Monomial piece.
    const Rational* exp = nullptr;
    switch (v) {
      case Var::z1: exp = &t.e.p1; break;
      case Var::z1s: exp = &t.e.q1; break;
      case Var::z2: exp = &t.e.p2; break;
      case Var::z2s: exp = &t.e.q2; break;
    }
    if (!exp->is_zero()) {
      ExpTuple e = t.e;
      switch (v) {
        case Var::z1: e.p1 = e.p1 - 1; break;
        case Var::z1s: e.q1 = e.q1 - 1; break;
        case Var::z2: e.p2 = e.p2 - 1; break;
        case Var::z2s: e.q2 = e.q2 - 1; break;
      }
      out += SymFunc::term(t.coeff * exp->as_double(), e);
    }
  }
  return out;
}

SymFunc poisson(const SymFunc& f, const SymFunc& g) {
  const std::complex<double> mi(0.0, -1.0);
  SymFunc out;
  out += partial(f, Var::z1) * partial(g, Var::z1s);
  out += -(partial(f, Var::z1s) * partial(g, Var::z1));
  out += partial(f, Var::z2) * partial(g, Var::z2s);
  out += -(partial(f, Var::z2s) * partial(g, Var::z2));
  return scale(mi, out);
}

std::complex<double> pow_principal(std::complex<double> w, const Rational& e) {
  if (e.is_zero()) return {1.0, 0.0};
  if (w == std::complex<double>(0.0, 0.0)) {
    if (e.is_integer() && e.num() > 0) return {0.0, 0.0};
    throw BranchPointError("pow_principal: z^e at z = 0 with negative or non-integer exponent");
  }
  if (e.is_integer() && e.num() >= -8 && e.num() <= 8) {
    // Exact repeated multiplication for small integer powers.
    std::complex<double> acc(1.0, 0.0);
    const std::int64_t n = e.num() < 0 ? -e.num() : e.num();
    for (std::int64_t k = 0; k < n; ++k) acc *= w;
    return e.num() < 0 ? 1.0 / acc : acc;
  }
  const double x = e.as_double();
  return std::polar(std::pow(std::abs(w), x), x * std::arg(w));
}

std::complex<double> eval(const SymFunc& f, const CPoint& p) {
  const double r = p.radius();
  std::complex<double> acc(0.0, 0.0);
  for (const SymTerm& t : f.terms()) {
    std::complex<double> v = t.coeff;
    if (!t.e.s.is_zero()) v *= pow_principal(std::complex<double>(r, 0.0), t.e.s);
    v *= pow_principal(p.z1, t.e.p1);
    v *= pow_principal(std::conj(p.z1), t.e.q1);
    v *= pow_principal(p.z2, t.e.p2);
    v *= pow_principal(std::conj(p.z2), t.e.q2);
    acc += v;
  }
  return acc;
}

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const SymTerm& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    const double re = t.coeff.real() == 0.0 ? 0.0 : t.coeff.real();  // drop -0
    const double im = t.coeff.imag() == 0.0 ? 0.0 : t.coeff.imag();
    os << "(" << re;
    if (im >= 0)
      os << "+" << im << "i)";
    else
      os << im << "i)";
    auto factor = [&os](const char* name, const Rational& e) {
      if (!e.is_zero()) os << " " << name << "^" << e.str();
    };
    factor("r", t.e.s);
    factor("z1", t.e.p1);
    factor("z1*", t.e.q1);
    factor("z2", t.e.p2);
    factor("z2*", t.e.q2);
  }
  return os.str();
}

}  // namespace c2qm
