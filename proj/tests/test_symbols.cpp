#include <doctest.h>

#include <cmath>

#include "mage/errors.hpp"
#include "mage/expr.hpp"
#include "mage/symbols.hpp"
#include "support.hpp"

using namespace mage;
using test::var;

namespace {

SymbolForm xi_monomial(int n, int i, int j) {
  Exponents e(static_cast<std::size_t>(n), 0);
  ++e[static_cast<std::size_t>(i - 1)];
  ++e[static_cast<std::size_t>(j - 1)];
  SymbolForm m(n);
  m.add(e, RationalFunction(1));
  return m;
}

SymbolForm sym(const char* text, int n = 2) {
  SymbolForm out(n);
  RationalFunction f = parse_function(text, n);
  // Read a xi-polynomial given as text through its coefficients in xi.
  for (const auto& e : xi_monomials(n, 2)) {
    RationalFunction c = f;
    std::map<std::string, Rational> zero;
    for (int i = 1; i <= n; ++i) {
      auto name = covector_name(i);
      for (std::uint32_t k = 0; k < e[static_cast<std::size_t>(i - 1)]; ++k) c = c.derivative(name);
      zero[name] = 0;
    }
    Rational fact = 1;
    for (auto k : e)
      for (std::uint32_t m = 2; m <= k; ++m) fact *= m;
    out.add(e, c.evaluate(zero) * RationalFunction(1 / fact));
  }
  return out;
}

RationalFunction random_h() {
  // Rational functions of p11, p12 with small random coefficients.
  std::vector<std::string> vars = {"p11", "p12"};
  RationalFunction num(test::rand_poly(vars, 3, 3));
  MultiPoly den = test::rand_poly(vars, 1, 2);
  if (den.is_zero()) den = MultiPoly(1);
  return num / RationalFunction(den);
}

RationalFunction ma_h(const std::vector<Rational>& k) {
  RationalFunction p11 = var("p11"), p12 = var("p12");
  return (RationalFunction(k[0]) * p12 * p12 - RationalFunction(k[1]) * p11 - RationalFunction(k[2]) * p12 -
          RationalFunction(k[4])) /
         (RationalFunction(k[3]) + RationalFunction(k[0]) * p11);
}

std::vector<Rational> random_k() {
  std::vector<Rational> k(5);
  do
    for (auto& x : k) x = test::rand_rational();
  while (k[0] == 0 && k[3] == 0);
  return k;
}

}  // namespace

TEST_CASE("symbol examples") {
  CHECK(symbol(parse_function("p11", 2), 2) == sym("xi1^2"));
  CHECK(symbol(parse_function("p11*p22 - p12^2", 2), 2) == sym("p22*xi1^2 - 2*p12*xi1*xi2 + p11*xi2^2"));
  RationalFunction h = parse_function("p11^3*p12 + p12^2/p11", 2);
  SymbolForm expect = sym("xi2^2");
  expect -= xi_monomial(2, 1, 1).scaled(h.derivative("p11"));
  expect -= xi_monomial(2, 1, 2).scaled(h.derivative("p12"));
  CHECK(symbol(var("p22") - h, 2) == expect);
  CHECK(to_string(symbol(parse_function("p11*p22 - p12^2", 2), 2)) == "p22*xi1^2 - 2*p12*xi1*xi2 + p11*xi2^2");
}

TEST_CASE("iterated symbol examples") {
  CHECK(iterated_symbol(parse_function("p11*p22 - p12^2", 2), 2, 2).is_zero());
  RationalFunction h = parse_function("p11^3*p12 + p12^2/p11", 2);
  SymbolForm expect(2);
  expect -= xi_monomial(2, 1, 1).scaled(h.derivative("p11").derivative("p11")) * xi_monomial(2, 1, 1);
  expect -= xi_monomial(2, 1, 1).scaled(RationalFunction(2) * h.derivative("p11").derivative("p12")) * xi_monomial(2, 1, 2);
  expect -= xi_monomial(2, 1, 1).scaled(h.derivative("p12").derivative("p12")) * xi_monomial(2, 2, 2);
  CHECK(iterated_symbol(var("p22") - h, 2, 2) == expect);
}

TEST_CASE("iterated symbol agrees with the recursion and is homogeneous") {
  for (int n : {2, 3}) {
    auto names = second_jet_names(n);
    for (int trial = 0; trial < 50; ++trial) {
      RationalFunction f(test::rand_poly(names, 3, 5));
      SymbolForm rec(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) rec += symbol(f.derivative(second_jet_name(i, j)), n) * xi_monomial(n, i, j);
      SymbolForm s2 = iterated_symbol(f, n, 2);
      CHECK(s2 == rec);
      CHECK(iterated_symbol(f, n, 1) == symbol(f, n));
      CHECK(s2.is_homogeneous(4));
      CHECK(iterated_symbol(f, n, 3).is_homogeneous(6));
    }
  }
}

TEST_CASE("classification") {
  auto wave = classify(parse_function("p11 - p22", 2));
  CHECK(wave.type == EquationType::hyperbolic);
  CHECK(wave.delta_value == Rational(4));
  REQUIRE(wave.roots.size() == 2);
  CHECK(to_string(wave.roots[0].value) == "1");
  CHECK(to_string(wave.roots[1].value) == "-1");
  CHECK(classify(parse_function("p11", 2)).type == EquationType::parabolic);
  auto ma = classify(parse_function("p11*p22 - p12^2 - 1", 2), Point{{"p11", 1}, {"p12", 0}, {"p22", 1}});
  CHECK(ma.type == EquationType::elliptic);
  CHECK(ma.delta_value == Rational(-4));
  CHECK(ma.delta == parse_function("4*p12^2 - 4*p11*p22", 2));
  // Irrational roots come back exact in Q(sqrt(Delta)) with an approximation.
  auto irr = classify(parse_function("p11 - 2*p22", 2));
  REQUIRE(irr.roots.size() == 2);
  CHECK_FALSE(irr.roots[0].exact);
  CHECK(irr.roots[0].approx == doctest::Approx(std::sqrt(0.5)));
  // F_p22 = 0: one finite root and one at infinity.
  auto inf = classify(parse_function("p12 + p11", 2));
  REQUIRE(inf.roots.size() == 2);
  CHECK_FALSE(inf.roots[0].at_infinity);
  CHECK(inf.roots[1].at_infinity);
  CHECK_THROWS_AS(classify(parse_function("p11*p22 - p12^2", 2)), DomainError);
  CHECK_THROWS_AS(classify(parse_function("1/p11 + p22", 2), Point{{"p11", 0}, {"p12", 0}, {"p22", 0}}), DomainError);
}

TEST_CASE("exceptionality at the roots") {
  auto wave = exceptionality_at_roots(parse_function("p11 - p22", 2), Point{{"p11", 3}, {"p12", -1}, {"p22", 2}});
  REQUIRE(wave.size() == 2);
  CHECK(wave[0].residual.is_zero());
  CHECK(wave[1].residual.is_zero());
  auto nl = exceptionality_at_roots(parse_function("p22 - p11^2", 2), Point{{"p11", Rational(1, 2)}, {"p12", 0}, {"p22", Rational(1, 4)}});
  REQUIRE(nl.size() == 2);
  for (const auto& r : nl) {
    REQUIRE(r.root.value.is_rational());
    CHECK(r.residual.is_rational());
    CHECK(r.residual.rational_part() == 1 / r.root.value.rational_part());
  }
  CHECK_THROWS_WITH_AS(exceptionality_at_roots(parse_function("p11 + p22", 2), Point{{"p11", 0}, {"p12", 0}, {"p22", 0}}),
                       doctest::Contains("elliptic"), DomainError);
  CHECK_THROWS_AS(exceptionality_at_roots(parse_function("p22 - p11^2", 2), Point{{"p11", 0}, {"p12", 0}, {"p22", 0}}),
                  DomainError);
  for (int trial = 0; trial < 10; ++trial) {
    auto k = random_k();
    RationalFunction f = RationalFunction(k[0]) * parse_function("p11*p22 - p12^2", 2) + RationalFunction(k[1]) * var("p11") +
                         RationalFunction(k[2]) * var("p12") + RationalFunction(k[3]) * var("p22") + RationalFunction(k[4]);
    Point pt{{"p11", test::rand_rational()}, {"p12", test::rand_rational()}, {"p22", test::rand_rational()}};
    auto c = classify(f, pt);
    if (c.type != EquationType::hyperbolic) continue;
    for (const auto& r : exceptionality_at_roots(f, pt)) CHECK(r.residual.is_zero());
  }
}

TEST_CASE("complete exceptionality examples") {
  for (int trial = 0; trial < 10; ++trial) {
    auto k = random_k();
    RationalFunction f = RationalFunction(k[0]) * parse_function("p11*p22 - p12^2", 2) + RationalFunction(k[1]) * var("p11") +
                         RationalFunction(k[2]) * var("p12") + RationalFunction(k[3]) * var("p22") + RationalFunction(k[4]);
    if (symbol(f, 2).is_zero()) continue;
    auto r = is_completely_exceptional(f, 2);
    CHECK(r.globally_proportional);
    REQUIRE(r.cofactor.has_value());
    CHECK(iterated_symbol(f, 2, 2) == symbol(f, 2) * *r.cofactor);
    CHECK(r.completely_exceptional());
  }
  auto nl = is_completely_exceptional(parse_function("p22 - p11^2", 2), 2);
  CHECK_FALSE(nl.globally_proportional);
  CHECK_FALSE(nl.residuals.empty());
  CHECK(nl.on_shell_proportional == false);
  auto par = is_completely_exceptional(parse_function("p11", 2), 2);
  CHECK(par.completely_exceptional());
  REQUIRE(par.cofactor.has_value());
  CHECK(par.cofactor->is_zero());
  CHECK(is_completely_exceptional(parse_function("p11 + p11*p22*p33 - p11*p23^2 - p12^2*p33 + 2*p12*p13*p23 - p13^2*p22", 3), 3)
            .completely_exceptional());
  CHECK_FALSE(is_completely_exceptional(parse_function("p33 - p11^2 - p22", 3), 3).completely_exceptional());
  CHECK_THROWS_WITH_AS(is_completely_exceptional(parse_function("u + p1", 2), 2), doctest::Contains("degenerate"), DomainError);
}

TEST_CASE("quasilinear system") {
  auto [a1, a2] = check_quasilinear_system(parse_function("3*p11 - 2*p12 + 7", 2));
  CHECK(a1.is_zero());
  CHECK(a2.is_zero());
  auto [b1, b2] = check_quasilinear_system(parse_function("p12^2", 2));
  CHECK(b1.is_zero());
  CHECK(b2 == parse_function("4*p12", 2));
  auto [c1, c2] = check_quasilinear_system(parse_function("(p12^2 - 1)/p11", 2));
  CHECK(c1.is_zero());
  CHECK(c2.is_zero());
}

TEST_CASE("quasilinear system agrees with on-shell proportionality") {
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction h = trial % 2 ? ma_h(random_k()) : random_h();
    RationalFunction f = var("p22") - h;
    if (symbol(f, 2).is_zero()) continue;
    auto [e1, e2] = check_quasilinear_system(h);
    auto r = is_completely_exceptional(f, 2);
    REQUIRE(r.on_shell_proportional.has_value());
    CHECK((e1.is_zero() && e2.is_zero()) == *r.on_shell_proportional);
  }
}

TEST_CASE("root residuals agree with on-shell residuals at hyperbolic points") {
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 20; ++trial) {
    RationalFunction h = trial % 3 == 0 ? ma_h(random_k()) : random_h();
    RationalFunction f = var("p22") - h;
    Point pt{{"p11", test::rand_rational()}, {"p12", test::rand_rational()}};
    try {
      pt["p22"] = h.value_at(pt);
      if (classify(f, pt).type != EquationType::hyperbolic) continue;
      auto roots = exceptionality_at_roots(f, pt);
      bool roots_zero = roots[0].residual.is_zero() && roots[1].residual.is_zero();
      auto r = is_completely_exceptional(f, 2);
      bool shell_zero = true;
      for (const auto& res : r.on_shell_residuals)
        if (RationalFunction(res).value_at(pt) != 0) shell_zero = false;
      CHECK(roots_zero == shell_zero);
      ++checked;
    } catch (const DomainError&) {
      // Pole or double root at this sample.
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("equation-level verdict is invariant under rescaling") {
  const std::vector<RationalFunction> gs = {RationalFunction(3), RationalFunction(Rational(-2, 5)), parse_function("1 + p11^2", 2)};
  for (int trial = 0; trial < 12; ++trial) {
    RationalFunction h = trial % 2 ? ma_h(random_k()) : random_h();
    RationalFunction f = var("p22") - h;
    if (symbol(f, 2).is_zero()) continue;
    bool base = *is_completely_exceptional(f, 2).on_shell_proportional;
    for (const auto& g : gs) CHECK(*is_completely_exceptional(g * f, 2).on_shell_proportional == base);
  }
}
