#include "c2qm/phi_expr.hpp"

#include <cctype>
#include <cstdlib>

#include "c2qm/operators.hpp"

namespace c2qm {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool number_ahead() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double number() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw PhiParseError("parse_phi: expected a number at '" + rest() + "'");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  long integer() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin) throw PhiParseError("parse_phi: expected an integer at '" + rest() + "'");
    if (*end == '.') throw PhiParseError("parse_phi: exponents must be integers");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  bool ident_ahead() { return std::isalpha(static_cast<unsigned char>(peek())); }

  std::string ident() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])))) {
      out += s_[pos_++];
      if (out == "x1" || out == "x2" || out == "x3") break;  // digits end the name
    }
    return out;
  }

  std::string rest() const { return s_.substr(pos_); }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

SymFunc power_of(const SymFunc& base, long n) {
  SymFunc acc = SymFunc::one();
  for (long k = 0; k < n; ++k) acc = acc * base;
  return acc;
}

// term := factor factor... with optional '*' separators; factor := number |
// ident ['^' int].
SymFunc parse_term(Scanner& sc) {
  SymFunc acc = SymFunc::one();
  bool saw_factor = false;
  for (;;) {
    if (sc.number_ahead()) {
      acc = scale(sc.number(), acc);
    } else if (sc.ident_ahead()) {
      const std::string name = sc.ident();
      long expnt = 1;
      if (sc.accept('^')) expnt = sc.integer();
      if (name == "r") {
        acc = r_times(acc, Rational(expnt));
      } else if (name == "x1" || name == "x2" || name == "x3") {
        if (expnt < 0)
          throw PhiParseError("parse_phi: negative powers only allowed on r, not " + name);
        acc = acc * power_of(hopf_coordinate(static_cast<Axis>(name[1] - '1')), expnt);
      } else {
        throw PhiParseError("parse_phi: unknown symbol '" + name + "'");
      }
    } else if (saw_factor && sc.accept('*')) {
      if (!sc.number_ahead() && !sc.ident_ahead())
        throw PhiParseError("parse_phi: expected a factor after '*' at '" + sc.rest() + "'");
      continue;
    } else {
      break;
    }
    saw_factor = true;
  }
  if (!saw_factor) throw PhiParseError("parse_phi: empty term at '" + sc.rest() + "'");
  return acc;
}

}  // namespace

SymFunc parse_phi(const std::string& text) {
  Scanner sc(text);
  if (sc.done()) throw PhiParseError("parse_phi: empty expression");
  SymFunc out;
  double sign = 1.0;
  if (sc.accept('-')) sign = -1.0;
  else sc.accept('+');
  for (;;) {
    out += scale(sign, parse_term(sc));
    if (sc.done()) break;
    if (sc.accept('+')) sign = 1.0;
    else if (sc.accept('-')) sign = -1.0;
    else throw PhiParseError("parse_phi: unexpected input at '" + sc.rest() + "'");
  }
  return out;
}

}  // namespace c2qm
