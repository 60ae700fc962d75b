#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mage/rational.hpp"

namespace mage {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  QVector row(std::size_t i) const;

  QMatrix transpose() const;
  bool is_zero() const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);

std::size_t rank(const QMatrix& m);
Rational determinant(const QMatrix& m);

/// Reduced row-echelon form (pivot entries 1, leftmost pivots, zero rows dropped).
QMatrix rref(const QMatrix& m);

/// Kernel basis in reduced row-echelon form: leading entry 1 in the leftmost possible
/// column, zeros above and below each leading entry. Serial reference implementation.
std::vector<QVector> nullspace(const QMatrix& m);
/// Same result as nullspace(), with the elimination steps spread over OpenMP threads.
std::vector<QVector> nullspace_parallel(const QMatrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
/// Throws DomainError when singular.
QMatrix inverse(const QMatrix& m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
/// Signature of a symmetric matrix by congruence diagonalization.
Inertia inertia(const QMatrix& symmetric);

}  // namespace mage
