#pragma once

#include <stdexcept>
#include <string>

#include "c2qm/symfunc.hpp"

namespace c2qm {

/// Thrown on malformed phi expressions.
class PhiParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse a restricted-state expression: sums of terms
///   coeff * x1^a x2^b x3^c r^d
/// with real coefficients, non-negative integer powers of x1, x2, x3 and
/// integer (possibly negative) powers of r. '*' between factors is optional.
/// Examples: "x3", "1", "r^-1", "2*x1^2 x3 r^-3", "x1 - 0.5*x2^2".
SymFunc parse_phi(const std::string& text);

}  // namespace c2qm
