#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "c2qm/monopole.hpp"
#include "c2qm/operators.hpp"
#include "c2qm/oracle.hpp"
#include "c2qm/serialize.hpp"

using namespace c2qm;

TEST_CASE("round trip preserves every term exactly") {
  const SymFunc cases[] = {
      SymFunc::zero(),
      SymFunc::one(),
      hopf_coordinate(Axis::x1) * hopf_coordinate(Axis::x3) + SymFunc::r_power(Rational(-2)),
      scale(std::complex<double>(0.25, -3.5), xi_factor(3, 1)),
      velocity(Axis::x2, hopf_coordinate(Axis::x1) * xi_factor(1, -1)),
  };
  for (const SymFunc& f : cases) {
    const SymFunc back = symfunc_from_json(symfunc_to_json(f));
    CHECK((back - f).is_zero());
    REQUIRE(back.size() == f.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
      CHECK(back.terms()[t].coeff == f.terms()[t].coeff);  // bitwise, not approximate
      CHECK(back.terms()[t].e == f.terms()[t].e);
    }
  }
}

TEST_CASE("serialization is canonical") {
  // Term order is normalized, so equal functions built differently serialize
  // to identical bytes.
  const SymFunc a = hopf_coordinate(Axis::x1) + SymFunc::r_power(Rational(2));
  const SymFunc b = SymFunc::r_power(Rational(2)) + hopf_coordinate(Axis::x1);
  CHECK(symfunc_to_json(a) == symfunc_to_json(b));
  CHECK(symfunc_to_json(a) == symfunc_to_json(symfunc_from_json(symfunc_to_json(a))));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(symfunc_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(R"({"terms": 3})"), std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(R"({"terms": [{"coeff": {"re": 1.0}}]})"),
                  std::invalid_argument);
  // exponent denominator not dividing 4
  CHECK_THROWS_AS(
      symfunc_from_json(
          R"({"terms": [{"coeff": {"re": 1.0, "im": 0.0},
              "s": {"num": 0, "den": 1}, "p1": {"num": 1, "den": 3},
              "q1": {"num": 0, "den": 1}, "p2": {"num": 0, "den": 1},
              "q2": {"num": 0, "den": 1}}]})"),
      std::invalid_argument);
}

TEST_CASE("deserialized functions evaluate identically") {
  const SymFunc f = laplace(hopf_coordinate(Axis::x2) * xi_factor(2, 0));
  const SymFunc g = symfunc_from_json(symfunc_to_json(f));
  CHECK(approx_equal(f, g, 1e-15, 30, 501).ok);
}
