#include <doctest.h>

#include "mage/errors.hpp"
#include "mage/expr.hpp"
#include "support.hpp"

using namespace mage;

namespace {

std::string tree(const char* text, int n = 2) { return to_tree_string(*parse(text, n)); }

std::size_t error_offset(const char* text, int n = 2) {
  try {
    parse(text, n);
  } catch (const ParseError& e) {
    return e.offset;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("parse trees") {
  CHECK(tree("p22 - p11^2") == "Sub(p22, Pow(p11, 2))");
  CHECK(tree("k0*(p11*p22 - p12^2) + k4") == "Add(Mul(k0, Sub(Mul(p11, p22), Pow(p12, 2))), k4)");
  CHECK(tree("-p11^2") == "Neg(Pow(p11, 2))");
  CHECK(tree("a - b - c") == "Sub(Sub(a, b), c)");
  CHECK(tree("a / b * c") == "Mul(Div(a, b), c)");
  CHECK(tree("p21") == "p12");
  CHECK(tree("0.5*xi1") == "Mul(1/2, xi1)");
}

TEST_CASE("variable kinds") {
  auto kind = [](const char* s, int n) { return classify_variable(s, n).kind; };
  CHECK(kind("x2", 2) == VarClass::base_x);
  CHECK(kind("u", 2) == VarClass::unknown_u);
  CHECK(kind("p1", 2) == VarClass::first_jet);
  CHECK(kind("p12", 2) == VarClass::second_jet);
  CHECK(kind("xi2", 2) == VarClass::covector);
  CHECK(kind("k0", 2) == VarClass::parameter);
  CHECK(classify_variable("p31", 3).name == "p13");
  CHECK_THROWS_AS(classify_variable("p13", 2), Error);
  CHECK_THROWS_AS(parse("p33 + 1", 2), Error);
}

TEST_CASE("syntax errors report offsets") {
  CHECK(error_offset("p11 +") == 5);
  CHECK(error_offset("(p11") == 4);
  CHECK(error_offset("p11 ^ 1.5") == 6);
  CHECK(error_offset("p11 $ 2") == 4);
  CHECK_THROWS_WITH_AS(parse("p11 +", 2), doctest::Contains("offset 5"), ParseError);
}

TEST_CASE("lowering") {
  RationalFunction f = lower(*parse("p22 - p11^2", 2));
  CHECK(f.is_polynomial());
  CHECK(f == RationalFunction(test::pvar("p22") - test::pvar("p11") * test::pvar("p11")));
  RationalFunction g = parse_function("(p12^2-1)/p11", 2);
  CHECK(g.denominator() == test::pvar("p11"));
  CHECK_THROWS_AS(parse_function("1/0", 2), DomainError);
  CHECK_THROWS_AS(parse_function("p11/(p12 - p12)", 2), DomainError);
}

TEST_CASE("format round-trips") {
  const std::vector<std::string> vars = {"p11", "p12", "p22", "k0", "xi1", "u"};
  for (int trial = 0; trial < 60; ++trial) {
    RationalFunction f(test::rand_poly(vars, 3, 4));
    MultiPoly d = test::rand_poly(vars, 2, 3);
    if (!d.is_zero()) f /= RationalFunction(d);
    CHECK(parse_function(format(f), 2) == f);
  }
  for (const char* s : {"-p11", "p11*p22 - p12^2", "(p12^2 - 1)/p11", "1/(2*p11*p22)", "-3/4", "p11/(p11 + 1)^2"}) {
    RationalFunction f = parse_function(s, 2);
    CHECK(parse_function(format(f), 2) == f);
  }
}
