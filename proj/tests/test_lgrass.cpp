#include <doctest.h>

#include "mage/errors.hpp"
#include "mage/expr.hpp"
#include "mage/lgrass.hpp"
#include "mage/symbols.hpp"
#include "support.hpp"

using namespace mage;

namespace {

Point point_of(const QMatrix& p) {
  Point pt;
  const int n = static_cast<int>(p.rows());
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) pt[second_jet_name(i, j)] = p(i - 1, j - 1);
  return pt;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

QVector unit(std::size_t size, std::size_t k) {
  QVector v(size);
  v[k] = 1;
  return v;
}

}  // namespace

TEST_CASE("minors chart examples") {
  Rational t(3, 2), l(-2, 3);
  QMatrix p = QMatrix::from_rows({{t, t * l}, {t * l, t * l * l}});
  CHECK(minors_chart(p).coords == QVector{1, t, t * l, t * l * l, 0});
  QVector zero = minors_chart(QMatrix(3, 3)).coords;
  CHECK(zero == unit(14, 0));
  QVector id = minors_chart(QMatrix::identity(3)).coords;
  const auto& idx = chart_indices(3);
  for (std::size_t c = 0; c < idx.size(); ++c) CHECK(id[c] == (idx[c].rows == idx[c].cols ? 1 : 0));
}

TEST_CASE("chart sizes") {
  for (int n = 2; n <= 4; ++n) {
    std::size_t expect = 0;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
      std::size_t c = binom(static_cast<std::size_t>(n), k);
      expect += (c * c + c) / 2;
    }
    CHECK(chart_indices(n).size() == expect);
    CHECK(independent_coordinates(n) == binom(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(n)) -
                                            binom(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(n) - 2));
  }
  CHECK(independent_coordinates(2) == 5);
  CHECK(independent_coordinates(3) == 14);
  CHECK(independent_coordinates(4) == 42);
  CHECK(chart_relations(3).empty());
  CHECK(chart_relations(4).size() == 1);
}

TEST_CASE("symbolic minors match numeric minors") {
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      QMatrix p = test::rand_symmetric(n);
      Point pt = point_of(p);
      QVector w = minors_chart(p).coords;
      const auto& sym = symbolic_minors(n);
      for (std::size_t c = 0; c < w.size(); ++c) CHECK(RationalFunction(sym[c]).value_at(pt) == w[c]);
    }
}

TEST_CASE("rank-one lines") {
  Rational l(5, 7);
  auto line = rank_one_line(QMatrix(2, 2), QVector{1, l});
  CHECK(line.affine);
  CHECK_FALSE(line.degenerate);
  REQUIRE(line.coefficients.size() == 5);
  const QVector slope = {0, 1, l, l * l, 0};
  for (std::size_t c = 0; c < 5; ++c) {
    CHECK(line.coefficients[c][0] == (c == 0 ? 1 : 0));
    if (line.coefficients[c].size() > 1) CHECK(line.coefficients[c][1] == slope[c]);
  }
  for (int n : {2, 3, 4})
    for (int trial = 0; trial < 10; ++trial) {
      auto r = rank_one_line(test::rand_symmetric(n), test::rand_vector(static_cast<std::size_t>(n)));
      CHECK(r.affine);
      for (const auto& c : r.coefficients)
        for (std::size_t k = 2; k < c.size(); ++k) CHECK(c[k] == 0);
    }
  auto flat = rank_one_line(test::rand_symmetric(3), QVector(3));
  CHECK(flat.degenerate);
  // A rank-two direction bends the determinant coordinate.
  QMatrix p = QMatrix::identity(2);
  QVector w0 = minors_chart(p).coords;
  QMatrix q = p;
  q(0, 0) += 1;
  q(1, 1) -= 1;
  CHECK(tangent_rank(QMatrix::from_rows({{1, 0}, {0, -1}})) == 2);
  CHECK(minors_chart(q).coords != w0);
}

TEST_CASE("tangent rank") {
  QVector xi = {2, -1, 3};
  QMatrix v(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) v(i, j) = xi[i] * xi[j];
  CHECK(tangent_rank(v) == 1);
  CHECK(tangent_rank(QMatrix::identity(3)) == 3);
  CHECK(tangent_rank(QMatrix::from_rows({{1, 0}, {0, -1}})) == 2);
}

TEST_CASE("hyperplane sections") {
  CHECK(hyperplane_section(2, unit(5, 4)) == test::pvar("p11") * test::pvar("p22") - test::pvar("p12") * test::pvar("p12"));
  std::vector<MultiPoly> k;
  for (const char* s : {"k4", "k1", "k2", "k3", "k0"}) k.push_back(test::pvar(s));
  MultiPoly ma = hyperplane_section(2, k);
  CHECK(RationalFunction(ma) == parse_function("k0*(p11*p22 - p12^2) + k1*p11 + k2*p12 + k3*p22 + k4", 2));
  QVector c3(14);
  c3[1] = 1;
  c3[13] = 1;
  CHECK(RationalFunction(hyperplane_section(3, c3)) ==
        parse_function("p11 + p11*p22*p33 - p11*p23^2 - p12^2*p33 + 2*p12*p13*p23 - p13^2*p22", 3));
  CHECK_THROWS_AS(hyperplane_section(2, QVector(5)), DomainError);
  CHECK_THROWS_AS(hyperplane_section(4, chart_relations(4)[0]), DomainError);
  for (int n : {2, 3})
    for (int trial = 0; trial < 10; ++trial) {
      QVector c = test::rand_vector(chart_indices(n).size());
      if (c == QVector(c.size())) continue;
      QMatrix p = test::rand_symmetric(n);
      QVector w = minors_chart(p).coords;
      Rational pairing = 0;
      for (std::size_t i = 0; i < c.size(); ++i) pairing += c[i] * w[i];
      CHECK(RationalFunction(hyperplane_section(n, c)).value_at(point_of(p)) == pairing);
    }
}

TEST_CASE("canonical hyperplanes vanish at the relation pivots") {
  QVector c = test::rand_vector(43);
  QVector canon = canonical_hyperplane(4, c);
  QMatrix p = test::rand_symmetric(4);
  QVector w = minors_chart(p).coords;
  Rational a = 0, b = 0;
  for (std::size_t i = 0; i < 43; ++i) {
    a += c[i] * w[i];
    b += canon[i] * w[i];
  }
  CHECK(a == b);
  for (const auto& rel : chart_relations(4)) {
    std::size_t piv = 0;
    while (rel[piv] == 0) ++piv;
    CHECK(canon[piv] == 0);
  }
}

TEST_CASE("Pluecker relations") {
  for (int trial = 0; trial < 100; ++trial) {
    QVector w = minors_chart(test::rand_symmetric(2)).coords;
    CHECK(w[0] * w[4] - w[1] * w[3] + w[2] * w[2] == 0);
    QVector v = minors_chart(test::rand_symmetric(4)).coords;
    auto m = [&](std::vector<int> r, std::vector<int> c) { return v[chart_index_of(4, MinorIndex{r, c})]; };
    CHECK(m({1, 2}, {3, 4}) - m({1, 3}, {2, 4}) + m({1, 4}, {2, 3}) == 0);
  }
}

TEST_CASE("rational inverse") {
  for (int n : {2, 3, 4})
    for (int trial = 0; trial < 5; ++trial) {
      QMatrix p = test::rand_symmetric(n);
      PlueckerVector w = minors_chart(p);
      CHECK(rational_inverse(w) == p);
      for (auto& x : w.coords) x *= 3;
      CHECK(rational_inverse(w) == p);
    }
  PlueckerVector w = minors_chart(QMatrix::identity(2));
  w.coords[0] = 0;
  CHECK_THROWS_WITH_AS(rational_inverse(w), doctest::Contains("outside the big cell"), DomainError);
}
