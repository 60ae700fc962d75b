#pragma once

#include <vector>

#include "mage/rational_function.hpp"

namespace mage {

using RFVector = std::vector<RationalFunction>;
using RFMatrix = std::vector<RFVector>;

struct FieldSolveResult {
  bool consistent = false;
  std::size_t rank = 0;
  /// One solution with free unknowns set to zero; empty when inconsistent.
  RFVector solution;
  /// Right-hand sides of the rows beyond the rank after elimination, made monic; all zero
  /// exactly when the system is consistent.
  std::vector<MultiPoly> residuals;
};

/// Solves A x = b over the field of rational functions. Rows are cleared of denominators
/// and eliminated fraction-free over Q[variables].
FieldSolveResult solve_over_field(const RFMatrix& a, const RFVector& b);

std::size_t rank_over_field(const RFMatrix& a);

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

/// Small dense matrices over the function field, by Gauss-Jordan elimination.
RationalFunction determinant(const RFMatrix& a);
/// Throws DomainError("singular matrix") when not invertible.
RFMatrix inverse(const RFMatrix& a);
RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);

}  // namespace mage
