#pragma once

#include <string>
#include <vector>

#include "mage/multipoly.hpp"
#include "mage/qmatrix.hpp"

namespace mage {

/// Unordered pair {rows, cols} of equal-size subsets of {1..n} (1-based, ascending), stored
/// with rows <= cols lexicographically.
struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;
  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

/// Chart coordinates of the minors embedding: by size, then (rows, cols) lexicographically.
/// Sizes run from 0 (the constant coordinate) to n.
const std::vector<MinorIndex>& chart_indices(int n);
std::size_t chart_index_of(int n, const MinorIndex& idx);

/// A point of the chart image, projectively: coordinates in chart_indices order.
struct PlueckerVector {
  int n = 0;
  QVector coords;
};

/// Symmetric n x n matrix with (i, j) entry p_ij.
QMatrix symmetric_from_point(int n, const std::map<std::string, Rational>& values);
bool is_symmetric(const QMatrix& p);

PlueckerVector minors_chart(const QMatrix& p);
/// The minors of the generic symmetric matrix (p_ij), in chart order.
const std::vector<MultiPoly>& symbolic_minors(int n);

/// Determinant of a square matrix of polynomials (fraction-free elimination).
MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m);

struct RankOneLine {
  int n = 0;
  bool degenerate = false;  // xi = 0: constant curve
  /// coefficients[c][k] = coefficient of t^k in chart coordinate c along P + t xi xi^T.
  std::vector<QVector> coefficients;
  /// Every coordinate has degree <= 1 in t.
  bool affine = false;
};
RankOneLine rank_one_line(const QMatrix& p, const QVector& xi);

/// Basis (reduced row-echelon) of the linear relations among the chart coordinates.
const std::vector<QVector>& chart_relations(int n);
/// Number of linearly independent chart coordinates.
std::size_t independent_coordinates(int n);

/// Representative of c modulo the relations, zero at every relation pivot.
QVector canonical_hyperplane(int n, const QVector& c);

/// sum_c coef_c * minor_c. Throws DomainError when c vanishes modulo the relations.
MultiPoly hyperplane_section(int n, const QVector& c);
/// Same with polynomial coefficients (e.g. symbolic parameters); no relation check.
MultiPoly hyperplane_section(int n, const std::vector<MultiPoly>& c);

std::size_t tangent_rank(const QMatrix& v);

/// Recovers P from the size-1 coordinates divided by the constant coordinate.
/// Throws DomainError("outside the big cell") when the constant coordinate is zero.
QMatrix rational_inverse(const PlueckerVector& w);

}  // namespace mage
