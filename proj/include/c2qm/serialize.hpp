#pragma once

#include <string>

#include "c2qm/symfunc.hpp"

namespace c2qm {

/// JSON form of a SymFunc: {"terms": [{"coeff": {"re", "im"},
/// "s"|"p1"|"q1"|"p2"|"q2": {"num", "den"}}, ...]}. Terms appear in the
/// canonical sorted order, so serialization is deterministic.
std::string symfunc_to_json(const SymFunc& f);

/// Inverse of symfunc_to_json. Throws std::invalid_argument on malformed
/// input (including exponent denominators that do not divide 4).
SymFunc symfunc_from_json(const std::string& text);

}  // namespace c2qm
