#include "c2qm/serialize.hpp"

#include <json.hpp>

namespace c2qm {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_to_json(const Rational& x) {
  return ordered_json{{"num", x.num()}, {"den", x.den()}};
}

Rational rational_from_json(const ordered_json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

}  // namespace

std::string symfunc_to_json(const SymFunc& f) {
  ordered_json terms = ordered_json::array();
  for (const SymTerm& t : f.terms()) {
    terms.push_back(ordered_json{
        {"coeff", ordered_json{{"re", t.coeff.real()}, {"im", t.coeff.imag()}}},
        {"s", rational_to_json(t.e.s)},
        {"p1", rational_to_json(t.e.p1)},
        {"q1", rational_to_json(t.e.q1)},
        {"p2", rational_to_json(t.e.p2)},
        {"q2", rational_to_json(t.e.q2)},
    });
  }
  return ordered_json{{"terms", terms}}.dump();
}

SymFunc symfunc_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("symfunc_from_json: ") + e.what());
  }
  SymFunc f;
  try {
    for (const ordered_json& t : j.at("terms")) {
      const ordered_json& c = t.at("coeff");
      const std::complex<double> coeff(c.at("re").get<double>(), c.at("im").get<double>());
      ExpTuple e{rational_from_json(t.at("s")), rational_from_json(t.at("p1")),
                 rational_from_json(t.at("q1")), rational_from_json(t.at("p2")),
                 rational_from_json(t.at("q2"))};
      f += SymFunc::term(coeff, e);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("symfunc_from_json: ") + e.what());
  }
  return f;
}

}  // namespace c2qm
