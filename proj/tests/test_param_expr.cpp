#include <doctest.h>

#include "properties.hpp"
#include "qseries/param_expr.hpp"

using namespace qseries;
using namespace qseries::testing;
namespace mp = boost::multiprecision;

TEST_CASE("grammar examples") {
  PrecisionScope scope(50);
  ParamExpr e = parse_param("-q^3");
  CHECK(e.kind == ParamExpr::Kind::Power);
  CHECK(e.sign == -1);
  CHECK(e.expNum == 3);
  CHECK(e.expDen == 1);
  CHECK(e.eval(Real("0.5")) == Real("-0.125"));

  ParamExpr lit = parse_param("0.35");
  CHECK(lit.kind == ParamExpr::Kind::Literal);
  CHECK(lit.eval(Real("0.9")) == Real("0.35"));
  CHECK(parse_param("-0.35").eval(Real("0.9")) == Real("-0.35"));

  ParamExpr frac = parse_param("-q^-5/3");
  CHECK(frac.sign == -1);
  CHECK(frac.expNum == -5);
  CHECK(frac.expDen == 3);
  Real oracle = -mp::exp(Real(-5) / 3 * mp::log(Real("0.3")));
  CHECK(rel_diff(frac.eval(Real("0.3")), oracle) < Real("1e-45"));
  CHECK(rel_diff(oracle, Real("-7.43814e+00")) < Real("1e-5"));

  CHECK(parse_param("q").eval(Real("0.3")) == Real("0.3"));
  CHECK(rel_diff(parse_param("2*q^0.5").eval(Real("0.25")), Real(1)) < Real("1e-45"));
  CHECK(rel_diff(parse_param("-1.5*q^-1").eval(Real("0.5")), Real(-3)) < Real("1e-45"));
}

TEST_CASE("print then parse is the identity") {
  for (const char* s : {"0.35", "-0.35", "q", "-q", "q^3", "-q^3", "-q^-5/3", "q^1/3", "2*q",
                        "-1.25*q^-0.5", "q^100", "q^-100", "q^300/3", "q^0", "007.50"}) {
    ParamExpr e = parse_param(s);
    ParamExpr again = parse_param(e.print());
    INFO(s);
    CHECK(e == again);
    CHECK(again.print() == e.print());
  }
  CHECK(parse_param("q^1").print() == "q");
}

TEST_CASE("syntax errors carry a position") {
  auto position = [](const char* s) -> long {
    try {
      parse_param(s);
    } catch (const SyntaxError& e) {
      CHECK(e.kind() == ErrorKind::Syntax);
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("") == 0);
  CHECK(position("x") == 0);
  CHECK(position("-") == 1);
  CHECK(position("q^") == 2);
  CHECK(position("q^3/0") == 4);
  CHECK(position("q^3/-2") == 4);
  CHECK(position("2*") == 2);
  CHECK(position("2q") == 1);
  CHECK(position("q^3x") == 3);
  CHECK(position("--q") == 1);
  CHECK(position("1.") == 2);
  CHECK(position("q^1.") == 4);
  CHECK(position(" q") == 0);
}

TEST_CASE("exponent overflow") {
  for (const char* s : {"q^101", "q^-101", "q^100.5", "q^-203/2", "q^99999999999999999999"}) {
    INFO(s);
    CHECK_THROWS_AS(parse_param(s), SyntaxError);
    try {
      parse_param(s);
    } catch (const SyntaxError& e) {
      CHECK(std::string(e.what()).find("overflow") != std::string::npos);
    }
  }
  CHECK_NOTHROW(parse_param("q^100.0"));
  CHECK_NOTHROW(parse_param("q^-200/2"));
}

TEST_CASE("evaluation needs a valid q") {
  PrecisionScope scope(50);
  CHECK_THROWS_AS(parse_param("q^2").eval(Real(1)), Error);
  CHECK_NOTHROW(parse_param("0.5").eval(Real(7)));
}
