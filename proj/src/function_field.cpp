#include "mage/function_field.hpp"

#include "mage/detail/bareiss.hpp"
#include "mage/errors.hpp"

namespace mage {

namespace {

struct PolyOps {
  static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error("internal: inexact fraction-free step");
    return std::move(*q);
  }
};

detail::DenseRows<MultiPoly> clear_denominators(const RFMatrix& a, const RFVector* b) {
  detail::DenseRows<MultiPoly> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RFVector row = a[i];
    if (b) row.push_back((*b)[i]);
    MultiPoly l(Rational(1));
    for (const auto& x : row) l = lcm(l, x.denominator());
    std::vector<MultiPoly> out;
    out.reserve(row.size());
    for (const auto& x : row) {
      auto q = divide_exact(l, x.denominator());
      out.push_back(x.numerator() * *q);
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

}  // namespace

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (a.is_constant()) return b.monic();
  if (b.is_constant()) return a.monic();
  return (*divide_exact(a, gcd(a, b)) * b).monic();
}

FieldSolveResult solve_over_field(const RFMatrix& a, const RFVector& b) {
  if (a.size() != b.size()) throw Error("solve_over_field: right-hand side has the wrong length");
  FieldSolveResult res;
  const std::size_t n = a.empty() ? 0 : a[0].size();
  auto rows = clear_denominators(a, &b);
  auto shape = detail::bareiss_echelon<MultiPoly, PolyOps>(rows, n);
  const auto& piv = shape.pivots;
  res.rank = piv.size();
  for (std::size_t i = res.rank; i < rows.size(); ++i)
    if (!rows[i][n].is_zero()) res.residuals.push_back(rows[i][n].monic());
  res.consistent = res.residuals.empty();
  if (!res.consistent) return res;
  res.solution.assign(n, RationalFunction());
  for (std::size_t i = piv.size(); i-- > 0;) {
    RationalFunction s(rows[i][n]);
    for (std::size_t j = piv[i] + 1; j < n; ++j)
      if (!rows[i][j].is_zero() && !res.solution[j].is_zero()) s -= RationalFunction(rows[i][j]) * res.solution[j];
    res.solution[piv[i]] = s / RationalFunction(rows[i][piv[i]]);
  }
  return res;
}

std::size_t rank_over_field(const RFMatrix& a) {
  if (a.empty()) return 0;
  auto rows = clear_denominators(a, nullptr);
  return detail::bareiss_echelon<MultiPoly, PolyOps>(rows, a[0].size()).pivots.size();
}

RationalFunction determinant(const RFMatrix& a0) {
  RFMatrix a = a0;
  const std::size_t n = a.size();
  RationalFunction det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t k = c;
    while (k < n && a[k][c].is_zero()) ++k;
    if (k == n) return RationalFunction();
    if (k != c) {
      std::swap(a[k], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      RationalFunction f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

RFMatrix inverse(const RFMatrix& a0) {
  const std::size_t n = a0.size();
  RFMatrix a = a0;
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n);
    a[i][n + i] = RationalFunction(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t k = c;
    while (k < n && a[k][c].is_zero()) ++k;
    if (k == n) throw DomainError("singular matrix");
    std::swap(a[k], a[c]);
    RationalFunction inv = RationalFunction(1) / a[c][c];
    for (std::size_t j = c; j < 2 * n; ++j)
      if (!a[c][j].is_zero()) a[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      RationalFunction f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j)
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
    }
  }
  RFMatrix out(n, RFVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw Error("matrix product: dimension mismatch");
  RFMatrix c(a.size(), RFVector(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < c[i].size(); ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace mage
