#include "mage/qmatrix.hpp"

#include <algorithm>

#include "mage/detail/bareiss.hpp"
#include "mage/errors.hpp"

namespace mage {

namespace {

struct IntegerOps {
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
  static Integer exact_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

// Row i scaled by the lcm of its denominators; the scale is returned alongside.
detail::DenseRows<Integer> integer_rows(const QMatrix& m, std::vector<Integer>* scales = nullptr) {
  detail::DenseRows<Integer> out(m.rows(), std::vector<Integer>(m.cols()));
  if (scales) scales->assign(m.rows(), Integer(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    if (scales) (*scales)[i] = l;
  }
  return out;
}

// Gauss-Jordan over Q on a small row set; used to canonicalize kernel bases.
std::vector<QVector> reduce_rows(std::vector<QVector> rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c] == 0) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[k], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<QVector> nullspace_impl(const QMatrix& m, bool parallel) {
  const std::size_t n = m.cols();
  auto a = integer_rows(m);
  auto shape = detail::bareiss_echelon<Integer, IntegerOps>(a, n, parallel);
  const auto& piv = shape.pivots;
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector x(n);
    x[f] = 1;
    for (std::size_t i = piv.size(); i-- > 0;) {
      Rational s = 0;
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (x[j] != 0 && sgn(a[i][j]) != 0) s += Rational(a[i][j]) * x[j];
      if (s != 0) x[piv[i]] = -s / Rational(a[i][piv[i]]);
    }
    basis.push_back(std::move(x));
  }
  return reduce_rows(std::move(basis), n);
}

}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) throw Error("matrix-vector product: dimension mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

std::size_t rank(const QMatrix& m) {
  auto a = integer_rows(m);
  return detail::bareiss_echelon<Integer, IntegerOps>(a, m.cols()).pivots.size();
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<Integer> scales;
  auto a = integer_rows(m, &scales);
  auto shape = detail::bareiss_echelon<Integer, IntegerOps>(a, m.cols());
  if (shape.pivots.size() < m.rows()) return 0;
  Rational d(a[m.rows() - 1][m.cols() - 1] * shape.swap_sign);
  for (const auto& s : scales) d /= Rational(s);
  return d;
}

QMatrix rref(const QMatrix& m) {
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto r = reduce_rows(std::move(rows), m.cols());
  if (r.empty()) return QMatrix(0, m.cols());
  return QMatrix::from_rows(r);
}

std::vector<QVector> nullspace(const QMatrix& m) { return nullspace_impl(m, false); }

std::vector<QVector> nullspace_parallel(const QMatrix& m) { return nullspace_impl(m, true); }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw Error("solve: right-hand side has the wrong length");
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    QVector r = m.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  auto red = reduce_rows(std::move(rows), m.cols() + 1);
  QVector x(m.cols());
  for (const auto& r : red) {
    std::size_t c = 0;
    while (c < m.cols() && r[c] == 0) ++c;
    if (c == m.cols()) return std::nullopt;  // 0 = nonzero
    x[c] = r[m.cols()];
  }
  return x;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("inverse of a non-square matrix");
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    QVector r = m.row(i);
    r.resize(2 * n);
    r[n + i] = 1;
    rows.push_back(std::move(r));
  }
  auto red = reduce_rows(std::move(rows), 2 * n);
  if (red.size() < n || red[n - 1][n - 1] == 0) throw DomainError("singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red[i][n + j];
  return inv;
}

Inertia inertia(const QMatrix& s) {
  const std::size_t n = s.rows();
  if (n != s.cols() || !(s == s.transpose())) throw Error("inertia needs a symmetric matrix");
  QMatrix a = s;
  Inertia out;
  // Congruence a -> E a E^T on the trailing block [k, n).
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  };
  auto swap_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t d = k + 1;
      while (d < n && a(d, d) == 0) ++d;
      if (d < n) {
        swap_index(k, d);
      } else {
        std::size_t o = k + 1;
        while (o < n && a(k, o) == 0) ++o;
        if (o == n) {
          ++out.zero;
          continue;
        }
        // a(k,k) becomes 2 a(k,o) != 0 because a(o,o) = 0.
        add_multiple(k, o, Rational(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i)
      if (a(i, k) != 0) add_multiple(i, k, -a(i, k) / a(k, k));
    (a(k, k) > 0 ? out.positive : out.negative) += 1;
  }
  return out;
}

}  // namespace mage
