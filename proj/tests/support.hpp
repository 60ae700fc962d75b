#pragma once

#include <random>
#include <string>
#include <vector>

#include "mage/function_field.hpp"
#include "mage/multipoly.hpp"
#include "mage/qmatrix.hpp"
#include "mage/variables.hpp"

namespace test {

using namespace mage;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational(long range = 5, long max_den = 4) {
  Rational q(rand_int(-range, range), rand_int(1, max_den));
  q.canonicalize();
  return q;
}

inline Rational rand_nonzero(long range = 5, long max_den = 4) {
  Rational q;
  do q = rand_rational(range, max_den);
  while (q == 0);
  return q;
}

/// Sum of `terms` random monomials of degree <= max_degree in the given variables.
inline MultiPoly rand_poly(const std::vector<std::string>& vars, int max_degree, int terms) {
  MultiPoly f;
  for (int t = 0; t < terms; ++t) {
    MultiPoly m(rand_rational());
    int deg = static_cast<int>(rand_int(0, max_degree));
    for (int k = 0; k < deg; ++k) m *= MultiPoly::variable(vars[static_cast<std::size_t>(rand_int(0, static_cast<long>(vars.size()) - 1))]);
    f += m;
  }
  return f;
}

inline QMatrix rand_symmetric(int n, long range = 4) {
  QMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p(i, j) = p(j, i) = rand_rational(range, 3);
  return p;
}

inline QVector rand_vector(std::size_t n, long range = 4) {
  QVector v(n);
  for (auto& x : v) x = rand_rational(range, 3);
  return v;
}

inline RationalFunction var(const std::string& name) { return RationalFunction::variable(name); }
inline MultiPoly pvar(const std::string& name) { return MultiPoly::variable(name); }

}  // namespace test
