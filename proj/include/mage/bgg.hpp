#pragma once

#include <cstddef>
#include <vector>

#include "mage/multipoly.hpp"
#include "mage/xi_form.hpp"

namespace mage {

/// (r+1)-st derivative of t -> f(P + t xi xi^T) at t = 0: a form of degree 2(r+1) in xi.
XiPolynomial bgg_apply(const MultiPoly& f, int n, int r);

struct KernelOptions {
  /// Largest admissible number of monomial columns.
  std::size_t cap = 20000;
  /// Solve the weight blocks concurrently.
  bool parallel = true;
};

struct KernelBasis {
  int n = 0;
  int r = 0;
  std::uint32_t degree_bound = 0;  // n r
  std::size_t dimension = 0;
  std::uint32_t max_degree = 0;
  std::size_t columns = 0;
  std::size_t blocks = 0;
  /// Reduced echelon basis over the monomials of degree <= n r, greatest leading monomial
  /// first; each element is zero at the leading monomials of the others.
  std::vector<MultiPoly> basis;
};

/// Number of p-monomials of degree <= n r, the column count of the kernel problem.
std::size_t kernel_columns(int n, int r);

/// Kernel of bgg_apply(., n, r) on polynomials of degree <= n r. The operator preserves the
/// degree and the torus weight of monomials, so the problem splits into independent blocks.
/// Throws DomainError when the column count exceeds the cap.
KernelBasis kernel_basis(int n, int r, const KernelOptions& opts = {});
/// Serial reference: one dense nullspace of the whole operator matrix.
KernelBasis kernel_basis_dense(int n, int r, const KernelOptions& opts = {});

/// Whether f lies in the span of the basis (reduction against the echelon form).
bool in_kernel_span(const MultiPoly& f, const KernelBasis& k);

/// Chart polynomial of a form of degree r in the minors coordinates w0, w1, ... (chart
/// order), with the check that it lies in the kernel.
struct SectionFunction {
  MultiPoly f;
  bool in_kernel = false;
};
SectionFunction section_function(const MultiPoly& form_in_w, int n, int r);

/// Names of the minors coordinates: "w0", "w1", ...
std::vector<std::string> minor_coordinate_names(int n);

}  // namespace mage
