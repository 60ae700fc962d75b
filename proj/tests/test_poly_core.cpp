#include <doctest.h>

#include <map>

#include "mage/errors.hpp"
#include "mage/expr.hpp"
#include "mage/function_field.hpp"
#include "mage/quadratic_surd.hpp"
#include "support.hpp"

using namespace mage;
using test::pvar;
using test::var;

namespace {

const std::vector<std::string> kVars = {"p11", "p12", "p22", "k0"};

// Expansion by distributing term by term, independent of MultiPoly multiplication.
std::map<std::map<std::string, unsigned>, Rational> distribute(const MultiPoly& a, const MultiPoly& b) {
  std::map<std::map<std::string, unsigned>, Rational> out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      std::map<std::string, unsigned> mono;
      for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i]) mono[a.vars()[i]] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i)
        if (eb[i]) mono[b.vars()[i]] += eb[i];
      out[mono] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::map<std::string, unsigned>, Rational> as_map(const MultiPoly& p) {
  std::map<std::map<std::string, unsigned>, Rational> out;
  for (const auto& [e, c] : p.terms()) {
    std::map<std::string, unsigned> mono;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) mono[p.vars()[i]] = e[i];
    out[mono] = c;
  }
  return out;
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
  Rational q(6, -4);
  q.canonicalize();
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("0.08") == Rational(2, 25));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("07/09") == Rational(7, 9));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  CHECK_FALSE(rational_sqrt(Rational(-1)).has_value());
}

TEST_CASE("polynomial arithmetic examples") {
  MultiPoly p11 = pvar("p11"), p12 = pvar("p12"), p22 = pvar("p22");
  CHECK((p11 + p12) * (p11 - p12) == p11 * p11 - p12 * p12);
  CHECK(p11 + MultiPoly() == p11);
  MultiPoly det = p11 * p22 - p12 * p12;
  MultiPoly sq = pow(det, 2);
  CHECK(as_map(sq) == distribute(det, det));
  CHECK(sq.term_count() == 3);
  CHECK(to_string(sq) == "p11^2*p22^2 - 2*p11*p12^2*p22 + p12^4");
  CHECK_THROWS_WITH_AS(pow(det, -1), doctest::Contains("use RationalFunction"), DomainError);
}

TEST_CASE("monomial order puts p11 first and sorts names naturally") {
  CHECK(variable_less("p11", "p12"));
  CHECK(variable_less("p12", "p22"));
  CHECK(variable_less("p22", "xi1"));
  CHECK(variable_less("xi2", "x1"));
  CHECK(variable_less("x1", "u"));
  CHECK(variable_less("u", "p1"));
  CHECK(variable_less("p2", "k0"));
  CHECK(variable_less("v2", "v11"));
  CHECK(to_string(pvar("p22") + pvar("p11") * pvar("p11") + pvar("p12")) == "p11^2 + p12 + p22");
}

TEST_CASE("derivatives") {
  MultiPoly det = pvar("p11") * pvar("p22") - pvar("p12") * pvar("p12");
  CHECK(det.derivative("p12") == MultiPoly(-2) * pvar("p12"));
  CHECK(MultiPoly(7).derivative("p11").is_zero());
  RationalFunction h = parse_function("(p12^2 - 1)/p11", 2);
  RationalFunction dh = h.derivative("p11");
  CHECK(dh == parse_function("-(p12^2 - 1)/p11^2", 2));
  // Clearing denominators: p11^2 dh = -(p12^2 - 1).
  CHECK(dh * var("p11") * var("p11") == parse_function("1 - p12^2", 2));
}

TEST_CASE("substitution examples") {
  RationalFunction det = parse_function("p11*p22 - p12^2", 2);
  CHECK(det.substitute({{"p22", parse_function("(1 + p12^2)/p11", 2)}}) == RationalFunction(1));
  CHECK(det.substitute({}) == det);
  CHECK(det.value_at({{"p11", 1}, {"p12", 0}, {"p22", 1}}) == 1);
  RationalFunction h = parse_function("1/(p11 - 1)", 2);
  CHECK_THROWS_WITH_AS(h.value_at({{"p11", 1}}), doctest::Contains("pole"), DomainError);
  CHECK_THROWS_WITH_AS(h.substitute({{"p11", RationalFunction(1)}}), doctest::Contains("pole"), DomainError);
}

TEST_CASE("rational functions are reduced with a monic denominator") {
  RationalFunction f(pvar("p11") * pvar("p11") - pvar("p12") * pvar("p12"), MultiPoly(2) * (pvar("p11") - pvar("p12")));
  CHECK(f.denominator() == MultiPoly(1));
  CHECK(f == RationalFunction(MultiPoly(Rational(1, 2)) * (pvar("p11") + pvar("p12"))));
  RationalFunction g(pvar("p12"), MultiPoly(-3) * pvar("p11"));
  CHECK(g.denominator() == pvar("p11"));
  CHECK(g.numerator() == MultiPoly(Rational(-1, 3)) * pvar("p12"));
  CHECK_THROWS_AS(RationalFunction(pvar("p11"), MultiPoly()), DomainError);
  CHECK(pow(var("p11"), -2) == RationalFunction(MultiPoly(1), pvar("p11") * pvar("p11")));
}

TEST_CASE("gcd") {
  MultiPoly a = pvar("p11") + pvar("p12"), b = pvar("p22") - MultiPoly(3) * pvar("k0"), c = pvar("p11") * pvar("p22") + 1;
  CHECK(gcd(a * b * b, b * c) == b.monic());
  CHECK(gcd(a * c, b).is_constant());
  CHECK(gcd(MultiPoly(), a) == a.monic());
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly f = test::rand_poly(kVars, 2, 3), g = test::rand_poly(kVars, 2, 3), h = test::rand_poly(kVars, 2, 2);
    if (h.is_zero() || f.is_zero() || g.is_zero()) continue;
    MultiPoly d = gcd(f * h, g * h);
    CHECK(divide_exact(f * h, d).has_value());
    CHECK(divide_exact(g * h, d).has_value());
    CHECK(divide_exact(d, h.monic()).has_value());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly f = test::rand_poly(kVars, 3, 4), g = test::rand_poly(kVars, 3, 4), h = test::rand_poly(kVars, 2, 3);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(f + g == g + f);
    CHECK(f - f == MultiPoly());
    CHECK(as_map(f * g) == distribute(f, g));
  }
}

TEST_CASE("derivative is a derivation") {
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly f = test::rand_poly(kVars, 3, 4), g = test::rand_poly(kVars, 3, 4);
    for (const auto& v : kVars) CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    RationalFunction q = RationalFunction(f);
    if (g.is_zero()) continue;
    q /= RationalFunction(g);
    // Quotient rule, checked after clearing denominators.
    for (const auto& v : kVars) {
      RationalFunction lhs = q.derivative(v) * RationalFunction(g * g);
      CHECK(lhs == RationalFunction(f.derivative(v) * g - f * g.derivative(v)));
    }
  }
}

TEST_CASE("substitution composes") {
  for (int trial = 0; trial < 25; ++trial) {
    RationalFunction f(test::rand_poly(kVars, 3, 4));
    RationalFunction a(test::rand_poly({"p12", "k0"}, 2, 2));
    RationalFunction b(test::rand_poly({"k0"}, 2, 2));
    auto two_stage = f.substitute({{"p11", a}}).substitute({{"p12", b}});
    auto one_stage = f.substitute({{"p11", a.substitute({{"p12", b}})}, {"p12", b}});
    CHECK(two_stage == one_stage);
  }
}

TEST_CASE("nullspace examples") {
  auto ker = nullspace(QMatrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == QVector{1, -1, 0});
  CHECK(nullspace(QMatrix::identity(4)).empty());
  auto z = nullspace(QMatrix(2, 3));
  REQUIRE(z.size() == 3);
  CHECK(z[0] == QVector{1, 0, 0});
  CHECK(z[1] == QVector{0, 1, 0});
  CHECK(z[2] == QVector{0, 0, 1});
}

TEST_CASE("nullspace properties and parallel agreement") {
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = static_cast<std::size_t>(test::rand_int(1, 7)), cols = static_cast<std::size_t>(test::rand_int(1, 9));
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (test::rand_int(0, 2)) m(i, j) = test::rand_rational();
    auto ker = nullspace(m);
    CHECK(rank(m) + ker.size() == cols);
    for (const auto& v : ker) {
      CHECK(m * v == QVector(rows));
      std::size_t lead = 0;
      while (v[lead] == 0) ++lead;
      CHECK(v[lead] == 1);
      // Reduced: other basis vectors vanish at this pivot.
      for (const auto& w : ker)
        if (&w != &v) CHECK(w[lead] == 0);
    }
    CHECK(nullspace_parallel(m) == ker);
  }
}

TEST_CASE("determinant, inverse and inertia") {
  QMatrix a = QMatrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(a) == 18);
  CHECK(a * inverse(a) == QMatrix::identity(3));
  CHECK_THROWS_AS(inverse(QMatrix::from_rows({{1, 2}, {2, 4}})), DomainError);
  auto in = inertia(QMatrix::from_rows({{0, 0, Rational(1, 2)}, {0, -1, 0}, {Rational(1, 2), 0, 0}}));
  CHECK(in.positive == 1);
  CHECK(in.negative == 2);
  CHECK(in.zero == 0);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix m = test::rand_symmetric(4);
    Rational d = determinant(m);
    // Cofactor expansion along the first row.
    Rational expect = 0;
    for (std::size_t c = 0; c < 4; ++c) {
      QMatrix minor(3, 3);
      for (std::size_t i = 1; i < 4; ++i)
        for (std::size_t j = 0, jj = 0; j < 4; ++j)
          if (j != c) minor(i - 1, jj++) = m(i, j);
      expect += (c % 2 ? -1 : 1) * m(0, c) * determinant(minor);
    }
    CHECK(d == expect);
  }
}

TEST_CASE("linear systems over the function field") {
  RFMatrix a = {{var("p11"), RationalFunction(1)}, {var("p12"), var("p22")}};
  RFVector b = {RationalFunction(1), RationalFunction(0)};
  auto s = solve_over_field(a, b);
  REQUIRE(s.consistent);
  CHECK(a[0][0] * s.solution[0] + a[0][1] * s.solution[1] == b[0]);
  CHECK(a[1][0] * s.solution[0] + a[1][1] * s.solution[1] == b[1]);
  RFMatrix sing = {{var("p11"), var("p12")}, {var("p11") * var("p11"), var("p11") * var("p12")}};
  auto t = solve_over_field(sing, {RationalFunction(1), RationalFunction(1)});
  CHECK_FALSE(t.consistent);
  CHECK(rank_over_field(sing) == 1);
  CHECK(determinant(sing).is_zero());
  CHECK(determinant(a) == var("p11") * var("p22") - var("p12"));
  RFMatrix inv = inverse(a);
  RFMatrix id = a * inv;
  CHECK(id[0][0] == RationalFunction(1));
  CHECK(id[0][1].is_zero());
  CHECK(id[1][0].is_zero());
  CHECK(id[1][1] == RationalFunction(1));
}

TEST_CASE("quadratic surds") {
  QuadraticSurd x(1, 1, 2), y(1, -1, 2);
  CHECK((x * y).is_rational());
  CHECK((x * y).rational_part() == -1);
  CHECK(to_string(x / y) == "-3 - 2*sqrt(2)");
  CHECK(QuadraticSurd(0, 1, 4).is_rational());
  CHECK(QuadraticSurd(0, 1, 4).rational_part() == 2);
  CHECK(x.approx() == doctest::Approx(2.41421356));
}

TEST_CASE("gcd with rational coefficients stays small") {
  MultiPoly f = parse_function("p12*p22*k0 + 4*p12*k0 - p22*k0 + 1", 2).numerator();
  MultiPoly g = parse_function("2*p11^3 + 5/3*p12*p22*k0 - 5/4*p12*k0^2 + 1/3*p11*p12", 2).numerator();
  CHECK(gcd(f * g.derivative("p11"), g * g) == MultiPoly(1));
  CHECK(gcd(f * g, g * g) == g.monic());
}
