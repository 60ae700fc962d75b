#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mage/quadratic_surd.hpp"
#include "mage/rational_function.hpp"
#include "mage/xi_form.hpp"

namespace mage {

using Point = std::map<std::string, Rational>;

/// sum_{i<=j} F_{p_ij} xi_i xi_j.
SymbolForm symbol(const RationalFunction& f, int n);

/// k-th derivative of t -> F(P + t xi xi^T) at t = 0; homogeneous of xi-degree 2k.
SymbolForm iterated_symbol(const RationalFunction& f, int n, int k);

enum class EquationType { hyperbolic, elliptic, parabolic, degenerate };
std::string to_string(EquationType t);

/// Root of F_p11 + F_p12 lambda + F_p22 lambda^2 = 0 at a point.
struct CharacteristicRoot {
  bool at_infinity = false;  // F_p22 vanishes and the root is lambda = infinity
  QuadraticSurd value;       // exact, in Q(sqrt(Delta))
  bool exact = true;         // value rational
  double approx = 0.0;
};

struct ClassificationResult {
  EquationType type = EquationType::degenerate;
  RationalFunction delta;              // F_p12^2 - 4 F_p11 F_p22
  std::optional<Rational> delta_value;  // Delta at the point (or Delta itself when constant)
  std::vector<CharacteristicRoot> roots;
};

/// n = 2 only. Without a point, Delta must be constant (or identically zero); otherwise a
/// point is required. Roots are returned when the symbol coefficients are fixed numbers
/// and Delta > 0; finite roots in descending order, the root at infinity last.
ClassificationResult classify(const RationalFunction& f, const std::optional<Point>& at = std::nullopt);

struct RootResidual {
  CharacteristicRoot root;
  QuadraticSurd residual;  // lambda_p11 + lambda_p12 lambda + lambda_p22 lambda^2
};

/// n = 2 at a strictly hyperbolic point: residuals of the zero-acceleration condition for
/// each characteristic root. The root at infinity is handled in the chart kappa = 1/lambda,
/// which exchanges the roles of p11 and p22.
std::vector<RootResidual> exceptionality_at_roots(const RationalFunction& f, const Point& at);

struct CofactorSolve {
  bool proportional = false;
  std::optional<SymbolForm> cofactor;  // quadratic C with s2 = s1 * C
  std::vector<MultiPoly> residuals;
};

/// Divides s2 by s1 as xi-forms over the field of rational functions; residuals are the
/// numerators of the remainder, all absent exactly when s2 = s1 * C.
CofactorSolve solve_cofactor(const SymbolForm& s1, const SymbolForm& s2, int n);

struct ExceptionalityReport {
  bool globally_proportional = false;
  std::optional<SymbolForm> cofactor;
  std::vector<MultiPoly> residuals;

  /// Present when the numerator of F is affine in some p_ij with nonzero coefficient;
  /// the test is then repeated on {F = 0} after solving for that variable.
  std::optional<bool> on_shell_proportional;
  std::string on_shell_variable;
  std::optional<RationalFunction> on_shell_value;
  std::optional<SymbolForm> on_shell_cofactor;
  std::vector<MultiPoly> on_shell_residuals;

  /// Equation-level verdict: the on-shell answer when available, the global one otherwise.
  bool completely_exceptional() const { return on_shell_proportional.value_or(globally_proportional); }
};

/// Throws DomainError("degenerate equation ...") when the symbol vanishes identically.
ExceptionalityReport is_completely_exceptional(const RationalFunction& f, int n);

/// For p22 = h(p11, p12, ...): (h_11,11 + h_11 h_12,12, 2 h_11,12 + h_12 h_12,12), using
/// h_a = dh/dp_a.
std::pair<RationalFunction, RationalFunction> check_quasilinear_system(const RationalFunction& h);

}  // namespace mage
