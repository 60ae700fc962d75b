#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace mage::detail {

template <class T>
using DenseRows = std::vector<std::vector<T>>;

struct EchelonShape {
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
  int swap_sign = 1;
};

/// Fraction-free Gaussian elimination in place on the first `ncols` columns; any further
/// columns (an augmented right-hand side) are carried along. Every intermediate entry is a
/// minor of the input, so `Ops::exact_div` is always exact. Rows [0, rank) end in echelon
/// form; rows below have zeros in the eliminated columns.
///
/// Ops must provide `static bool is_zero(const T&)` and `static T exact_div(const T&, const T&)`.
/// With `parallel`, the row updates of each step run under OpenMP. Each row is updated by
/// the same sequence of operations either way, so the output is identical.
template <class T, class Ops>
EchelonShape bareiss_echelon(DenseRows<T>& a, std::size_t ncols, bool parallel = false) {
  EchelonShape shape;
  const std::size_t m = a.size();
  if (m == 0) return shape;
  const std::size_t width = a[0].size();
  T prev = T(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t k = r;
    while (k < m && Ops::is_zero(a[k][c])) ++k;
    if (k == m) continue;
    if (k != r) {
      std::swap(a[k], a[r]);
      shape.swap_sign = -shape.swap_sign;
    }
    const std::vector<T>& piv = a[r];
    const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(r + 1), hi = static_cast<std::ptrdiff_t>(m);
    auto update = [&](std::vector<T>& row) {
      if (Ops::is_zero(row[c])) {
        // Row untouched by this pivot: a pure rescale by piv[c] / prev.
        for (std::size_t j = c + 1; j < width; ++j)
          if (!Ops::is_zero(row[j])) row[j] = Ops::exact_div(piv[c] * row[j], prev);
        return;
      }
      for (std::size_t j = c + 1; j < width; ++j) row[j] = Ops::exact_div(piv[c] * row[j] - row[c] * piv[j], prev);
      row[c] = T(0);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t i = lo; i < hi; ++i) update(a[static_cast<std::size_t>(i)]);
    } else {
      for (std::ptrdiff_t i = lo; i < hi; ++i) update(a[static_cast<std::size_t>(i)]);
    }
    prev = piv[c];
    shape.pivots.push_back(c);
    ++r;
  }
  return shape;
}

}  // namespace mage::detail
